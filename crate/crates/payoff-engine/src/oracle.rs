//! Literal, independent implementation of the 17 displayed payoff sums.
//!
//! This transliterates each displayed sum directly — pmf factors multiplied
//! term by term in rational arithmetic, indicator functions applied to the
//! referenced triple — without any of the table bookkeeping used by the
//! engine proper.  It exists solely as a test oracle: the decomposition and
//! this function must agree exactly on random `(u1, u2, T, θ)` instances.

use num::rational::Ratio;

type Q = Ratio<i128>;

fn q(i: usize) -> Q {
    Ratio::new(if i == 0 { 25 } else { 16 }, 169)
}

fn qp(k: usize) -> Q {
    Ratio::new(if k == 0 { 4 } else { 1 }, 13)
}

fn m(i: usize) -> usize {
    i % 10
}

fn sgn(a: usize, b: usize) -> Q {
    Ratio::from_integer(match a.cmp(&b) {
        std::cmp::Ordering::Less => -1,
        std::cmp::Ordering::Equal => 0,
        std::cmp::Ordering::Greater => 1,
    })
}

/// Evaluates `a_{u1,u2,T}(θ)` by direct summation of terms 1–17.
///
/// `in_t(k1, k2, j)` is the indicator of Banker's draw set `T`.
pub fn literal_payoff(
    theta: &Q,
    u1: usize,
    u2: usize,
    in_t: &dyn Fn(usize, usize, usize) -> bool,
) -> Q {
    assert!(u1 <= 1 && u2 <= 1);
    let th = *theta;
    let om = Q::from_integer(1) - th;
    let one = Q::from_integer(1);
    let mut total = Q::from_integer(0);

    // Term 1: Banker has a natural, and/or both Players do.
    for i1 in 0..=9 {
        for i2 in 0..=9 {
            for j in 8..=9 {
                total += q(i1) * q(i2) * q(j) * (th * sgn(i1, j) + om * sgn(i2, j));
            }
        }
    }
    for i1 in 8..=9 {
        for i2 in 8..=9 {
            for j in 0..=7 {
                total += q(i1) * q(i2) * q(j) * (th * sgn(i1, j) + om * sgn(i2, j));
            }
        }
    }

    // Terms 2–5: only Player 1 has a natural.
    for i1 in 8..=9 {
        for i2 in 0..=(4 + u2) {
            for j in 0..=7 {
                for k2 in 0..=9 {
                    if in_t(11, k2, j) {
                        for l in 0..=9 {
                            total += q(i1)
                                * q(i2)
                                * q(j)
                                * qp(k2)
                                * qp(l)
                                * (th * one + om * sgn(m(i2 + k2), m(j + l)));
                        }
                    } else {
                        total += q(i1)
                            * q(i2)
                            * q(j)
                            * qp(k2)
                            * (th * one + om * sgn(m(i2 + k2), j));
                    }
                }
            }
        }
        for i2 in (5 + u2)..=7 {
            for j in 0..=7 {
                if in_t(11, 10, j) {
                    for l in 0..=9 {
                        total +=
                            q(i1) * q(i2) * q(j) * qp(l) * (th * one + om * sgn(i2, m(j + l)));
                    }
                } else {
                    total += q(i1) * q(i2) * q(j) * (th * one + om * sgn(i2, j));
                }
            }
        }
    }

    // Terms 6–9: only Player 2 has a natural.
    for i2 in 8..=9 {
        for i1 in 0..=(4 + u1) {
            for j in 0..=7 {
                for k1 in 0..=9 {
                    if in_t(k1, 11, j) {
                        for l in 0..=9 {
                            total += q(i1)
                                * q(i2)
                                * q(j)
                                * qp(k1)
                                * qp(l)
                                * (th * sgn(m(i1 + k1), m(j + l)) + om * one);
                        }
                    } else {
                        total += q(i1)
                            * q(i2)
                            * q(j)
                            * qp(k1)
                            * (th * sgn(m(i1 + k1), j) + om * one);
                    }
                }
            }
        }
        for i1 in (5 + u1)..=7 {
            for j in 0..=7 {
                if in_t(10, 11, j) {
                    for l in 0..=9 {
                        total +=
                            q(i1) * q(i2) * q(j) * qp(l) * (th * sgn(i1, m(j + l)) + om * one);
                    }
                } else {
                    total += q(i1) * q(i2) * q(j) * (th * sgn(i1, j) + om * one);
                }
            }
        }
    }

    // Terms 10–17: no naturals.
    for j in 0..=7 {
        for i1 in 0..=(4 + u1) {
            for i2 in 0..=(4 + u2) {
                for k1 in 0..=9 {
                    for k2 in 0..=9 {
                        if in_t(k1, k2, j) {
                            for l in 0..=9 {
                                total += q(i1)
                                    * q(i2)
                                    * q(j)
                                    * qp(k1)
                                    * qp(k2)
                                    * qp(l)
                                    * (th * sgn(m(i1 + k1), m(j + l))
                                        + om * sgn(m(i2 + k2), m(j + l)));
                            }
                        } else {
                            total += q(i1)
                                * q(i2)
                                * q(j)
                                * qp(k1)
                                * qp(k2)
                                * (th * sgn(m(i1 + k1), j) + om * sgn(m(i2 + k2), j));
                        }
                    }
                }
            }
            for i2 in (5 + u2)..=7 {
                for k1 in 0..=9 {
                    if in_t(k1, 10, j) {
                        for l in 0..=9 {
                            total += q(i1)
                                * q(i2)
                                * q(j)
                                * qp(k1)
                                * qp(l)
                                * (th * sgn(m(i1 + k1), m(j + l)) + om * sgn(i2, m(j + l)));
                        }
                    } else {
                        total += q(i1)
                            * q(i2)
                            * q(j)
                            * qp(k1)
                            * (th * sgn(m(i1 + k1), j) + om * sgn(i2, j));
                    }
                }
            }
        }
        for i1 in (5 + u1)..=7 {
            for i2 in 0..=(4 + u2) {
                for k2 in 0..=9 {
                    if in_t(10, k2, j) {
                        for l in 0..=9 {
                            total += q(i1)
                                * q(i2)
                                * q(j)
                                * qp(k2)
                                * qp(l)
                                * (th * sgn(i1, m(j + l)) + om * sgn(m(i2 + k2), m(j + l)));
                        }
                    } else {
                        total += q(i1)
                            * q(i2)
                            * q(j)
                            * qp(k2)
                            * (th * sgn(i1, j) + om * sgn(m(i2 + k2), j));
                    }
                }
            }
            for i2 in (5 + u2)..=7 {
                if in_t(10, 10, j) {
                    for l in 0..=9 {
                        total += q(i1)
                            * q(i2)
                            * q(j)
                            * qp(l)
                            * (th * sgn(i1, m(j + l)) + om * sgn(i2, m(j + l)));
                    }
                } else {
                    total += q(i1) * q(i2) * q(j) * (th * sgn(i1, j) + om * sgn(i2, j));
                }
            }
        }
    }

    total
}
