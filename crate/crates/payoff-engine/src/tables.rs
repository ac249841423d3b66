//! Integer accumulation of the 17-term payoff functional.
//!
//! Every elementary contribution to `a_{u1,u2,T}(θ)` is a product of pmf
//! weights times a bracket `θ·s1 + (1−θ)·s2` with `s1, s2 ∈ {−1, 0, 1}`.
//! Over the common denominator 13⁹ each contribution is therefore an integer
//! pair `(c0, c1)` standing for `(c0 + c1·θ)/13⁹`, with `c0` collecting the
//! `s2` parts and `c1` the `s1 − s2` parts.  The tables are independent of θ
//! and are built once per process.
//!
//! Term 1 (all-naturals cases) is the base, independent of Banker's choice;
//! terms 2–17 are attributed to the unique information set whose indicator
//! they reference, as a draw (`1_T`) or stand (`1_{T^c}`) contribution, with
//! the per-player-pure-strategy dependence captured by evaluating each term
//! at the four `(u1, u2)` vertices.

/// `13⁹`, the common denominator of every table entry.
pub const DEN_POW: i64 = 10_604_499_373;

/// Dense index for `(k1, k2, j)` over the full `12·12·8` grid (the eight
/// `(11,11,·)` slots stay untouched).
#[inline]
pub fn dense_index(k1: usize, k2: usize, j: usize) -> usize {
    (k1 * 12 + k2) * 8 + j
}

/// Number of dense slots.
pub const DENSE_LEN: usize = 12 * 12 * 8;

/// θ-affine integer pair `(c0, c1)` meaning `(c0 + c1·θ)/13⁹`.
pub type Affine = (i64, i64);

/// The precomputed contribution tables.
pub struct RawTables {
    /// Term 1: independent of the Players' choices and of `T`.
    pub base: Affine,
    /// Draw contribution per dense info-set index and `(u1,u2)` vertex
    /// (vertex index `u1·2 + u2`).
    pub draw: Vec<[Affine; 4]>,
    /// Stand contribution, same layout.
    pub stand: Vec<[Affine; 4]>,
}

/// Two-card-total pmf numerator over 169.
#[inline]
fn qn(i: usize) -> i64 {
    if i == 0 {
        25
    } else {
        16
    }
}

/// Card-value pmf numerator over 13.
#[inline]
fn cn(k: usize) -> i64 {
    if k == 0 {
        4
    } else {
        1
    }
}

#[inline]
fn m10(i: usize) -> usize {
    i % 10
}

#[inline]
fn sgn(a: usize, b: usize) -> i64 {
    match a.cmp(&b) {
        std::cmp::Ordering::Less => -1,
        std::cmp::Ordering::Equal => 0,
        std::cmp::Ordering::Greater => 1,
    }
}

/// Accumulates `w·[θ·s1 + (1−θ)·s2]` into an affine pair.
#[inline]
fn acc(cell: &mut Affine, w: i64, s1: i64, s2: i64) {
    cell.0 += w * s2;
    cell.1 += w * (s1 - s2);
}

/// Builds the tables; see the module docs for the encoding.
pub fn build_tables() -> RawTables {
    let mut base: Affine = (0, 0);
    let mut draw = vec![[(0i64, 0i64); 4]; DENSE_LEN];
    let mut stand = vec![[(0i64, 0i64); 4]; DENSE_LEN];

    // Term 1: Banker and/or both Players have naturals.  No q′ factors, so
    // the 13⁹ scaling contributes a factor 13³ = 2197.
    for i1 in 0..=9 {
        for i2 in 0..=9 {
            for j in 8..=9 {
                let w = qn(i1) * qn(i2) * qn(j) * 2197;
                acc(&mut base, w, sgn(i1, j), sgn(i2, j));
            }
        }
    }
    for i1 in 8..=9 {
        for i2 in 8..=9 {
            for j in 0..=7 {
                let w = qn(i1) * qn(i2) * qn(j) * 2197;
                acc(&mut base, w, sgn(i1, j), sgn(i2, j));
            }
        }
    }

    for u1 in 0..2usize {
        for u2 in 0..2usize {
            let v = u1 * 2 + u2;

            // Terms 2–5: only Player 1 has a natural (k1 code 11).
            for i1 in 8..=9 {
                for j in 0..=7 {
                    // Term 2 (draw on (11, k2, j)) and term 3 (stand).
                    for i2 in 0..=(4 + u2) {
                        for k2 in 0..=9 {
                            let base_w = qn(i1) * qn(i2) * qn(j) * cn(k2);
                            for l in 0..=9 {
                                let w = base_w * cn(l) * 13;
                                let s2 = sgn(m10(i2 + k2), m10(j + l));
                                acc(&mut draw[dense_index(11, k2, j)][v], w, 1, s2);
                            }
                            let w = base_w * 169;
                            let s2 = sgn(m10(i2 + k2), j);
                            acc(&mut stand[dense_index(11, k2, j)][v], w, 1, s2);
                        }
                    }
                    // Term 4 (draw on (11, 10, j)) and term 5 (stand).
                    for i2 in (5 + u2)..=7 {
                        let base_w = qn(i1) * qn(i2) * qn(j);
                        for l in 0..=9 {
                            let w = base_w * cn(l) * 169;
                            let s2 = sgn(i2, m10(j + l));
                            acc(&mut draw[dense_index(11, 10, j)][v], w, 1, s2);
                        }
                        let w = base_w * 2197;
                        acc(&mut stand[dense_index(11, 10, j)][v], w, 1, sgn(i2, j));
                    }
                }
            }

            // Terms 6–9: only Player 2 has a natural (k2 code 11).
            for i2 in 8..=9 {
                for j in 0..=7 {
                    // Term 6 (draw on (k1, 11, j)) and term 7 (stand).
                    for i1 in 0..=(4 + u1) {
                        for k1 in 0..=9 {
                            let base_w = qn(i1) * qn(i2) * qn(j) * cn(k1);
                            for l in 0..=9 {
                                let w = base_w * cn(l) * 13;
                                let s1 = sgn(m10(i1 + k1), m10(j + l));
                                acc(&mut draw[dense_index(k1, 11, j)][v], w, s1, 1);
                            }
                            let w = base_w * 169;
                            let s1 = sgn(m10(i1 + k1), j);
                            acc(&mut stand[dense_index(k1, 11, j)][v], w, s1, 1);
                        }
                    }
                    // Term 8 (draw on (10, 11, j)) and term 9 (stand).
                    for i1 in (5 + u1)..=7 {
                        let base_w = qn(i1) * qn(i2) * qn(j);
                        for l in 0..=9 {
                            let w = base_w * cn(l) * 169;
                            let s1 = sgn(i1, m10(j + l));
                            acc(&mut draw[dense_index(10, 11, j)][v], w, s1, 1);
                        }
                        let w = base_w * 2197;
                        acc(&mut stand[dense_index(10, 11, j)][v], w, sgn(i1, j), 1);
                    }
                }
            }

            // Terms 10–17: no naturals.
            for i1 in 0..=(4 + u1) {
                for i2 in 0..=(4 + u2) {
                    for j in 0..=7 {
                        // Terms 10 (draw on (k1, k2, j)) and 11 (stand).
                        for k1 in 0..=9 {
                            for k2 in 0..=9 {
                                let base_w = qn(i1) * qn(i2) * qn(j) * cn(k1) * cn(k2);
                                for l in 0..=9 {
                                    let w = base_w * cn(l);
                                    let s1 = sgn(m10(i1 + k1), m10(j + l));
                                    let s2 = sgn(m10(i2 + k2), m10(j + l));
                                    acc(&mut draw[dense_index(k1, k2, j)][v], w, s1, s2);
                                }
                                let w = base_w * 13;
                                let s1 = sgn(m10(i1 + k1), j);
                                let s2 = sgn(m10(i2 + k2), j);
                                acc(&mut stand[dense_index(k1, k2, j)][v], w, s1, s2);
                            }
                        }
                    }
                }
                // Terms 12 (draw on (k1, 10, j)) and 13 (stand): Player 2 stood.
                for i2 in (5 + u2)..=7 {
                    for j in 0..=7 {
                        for k1 in 0..=9 {
                            let base_w = qn(i1) * qn(i2) * qn(j) * cn(k1);
                            for l in 0..=9 {
                                let w = base_w * cn(l) * 13;
                                let s1 = sgn(m10(i1 + k1), m10(j + l));
                                let s2 = sgn(i2, m10(j + l));
                                acc(&mut draw[dense_index(k1, 10, j)][v], w, s1, s2);
                            }
                            let w = base_w * 169;
                            let s1 = sgn(m10(i1 + k1), j);
                            acc(&mut stand[dense_index(k1, 10, j)][v], w, s1, sgn(i2, j));
                        }
                    }
                }
            }
            for i1 in (5 + u1)..=7 {
                // Terms 14 (draw on (10, k2, j)) and 15 (stand): Player 1 stood.
                for i2 in 0..=(4 + u2) {
                    for j in 0..=7 {
                        for k2 in 0..=9 {
                            let base_w = qn(i1) * qn(i2) * qn(j) * cn(k2);
                            for l in 0..=9 {
                                let w = base_w * cn(l) * 13;
                                let s1 = sgn(i1, m10(j + l));
                                let s2 = sgn(m10(i2 + k2), m10(j + l));
                                acc(&mut draw[dense_index(10, k2, j)][v], w, s1, s2);
                            }
                            let w = base_w * 169;
                            let s2 = sgn(m10(i2 + k2), j);
                            acc(&mut stand[dense_index(10, k2, j)][v], w, sgn(i1, j), s2);
                        }
                    }
                }
                // Terms 16 (draw on (10, 10, j)) and 17 (stand): both stood.
                for i2 in (5 + u2)..=7 {
                    for j in 0..=7 {
                        let base_w = qn(i1) * qn(i2) * qn(j);
                        for l in 0..=9 {
                            let w = base_w * cn(l) * 169;
                            let s1 = sgn(i1, m10(j + l));
                            let s2 = sgn(i2, m10(j + l));
                            acc(&mut draw[dense_index(10, 10, j)][v], w, s1, s2);
                        }
                        let w = base_w * 2197;
                        acc(&mut stand[dense_index(10, 10, j)][v], w, sgn(i1, j), sgn(i2, j));
                    }
                }
            }
        }
    }

    RawTables { base, draw, stand }
}

/// Shared tables, built on first use.
pub fn raw_tables() -> &'static RawTables {
    use std::sync::OnceLock;
    static TABLES: OnceLock<RawTables> = OnceLock::new();
    TABLES.get_or_init(build_tables)
}
