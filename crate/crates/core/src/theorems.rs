//! The polynomial families built by brute-force enumeration, the matching
//! continued-fraction weight schemes, the specialisation maps between
//! them, and the verification registry that compares brute sums to
//! continued-fraction expansions by exact polynomial equality.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use serde::Serialize;

use crate::cfrac::{expand, CfSpec};
use crate::perm::{d_permutations, permutations, DPermClass, Permutation};
use crate::poly::{vars, Monomial, MultiPoly, Variable};
use crate::stats::{
    cycle_class, lcross, lcross_p, lnest, lnest_p, psnest, stat_vector, ucross, ucross_p, unest,
    unest_p, CycleClass, StatVector,
};

/// Identifiers of the verified continued-fraction theorems.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub enum TheoremId {
    PermMaster,
    PermPQ,
    PermSZ,
    DpermMaster,
    DpermPQ,
    DpermDS,
    DpermMasterPrime,
    DpermPQPrime,
    DpermPrime,
    DCycle,
    Minval,
    MinvalPrime,
    RZ,
}

impl TheoremId {
    pub const ALL: [TheoremId; 13] = [
        TheoremId::PermMaster,
        TheoremId::PermPQ,
        TheoremId::PermSZ,
        TheoremId::DpermMaster,
        TheoremId::DpermPQ,
        TheoremId::DpermDS,
        TheoremId::DpermMasterPrime,
        TheoremId::DpermPQPrime,
        TheoremId::DpermPrime,
        TheoremId::DCycle,
        TheoremId::Minval,
        TheoremId::MinvalPrime,
        TheoremId::RZ,
    ];

    pub fn name(self) -> &'static str {
        match self {
            TheoremId::PermMaster => "PermMaster",
            TheoremId::PermPQ => "PermPQ",
            TheoremId::PermSZ => "PermSZ",
            TheoremId::DpermMaster => "DpermMaster",
            TheoremId::DpermPQ => "DpermPQ",
            TheoremId::DpermDS => "DpermDS",
            TheoremId::DpermMasterPrime => "DpermMasterPrime",
            TheoremId::DpermPQPrime => "DpermPQPrime",
            TheoremId::DpermPrime => "DpermPrime",
            TheoremId::DCycle => "DCycle",
            TheoremId::Minval => "Minval",
            TheoremId::MinvalPrime => "MinvalPrime",
            TheoremId::RZ => "RZ",
        }
    }
}

impl fmt::Display for TheoremId {
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(out, "{}", self.name())
    }
}

impl FromStr for TheoremId {
    type Err = String;

    fn from_str(s: &str) -> Result<TheoremId, String> {
        TheoremId::ALL
            .iter()
            .copied()
            .find(|id| id.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| format!("unknown theorem {s:?}"))
    }
}

fn lam() -> MultiPoly {
    MultiPoly::var(vars::lambda())
}

/// `v + c` as a polynomial.
fn shifted(v: Variable, c: i64) -> MultiPoly {
    MultiPoly::var(v).add(&MultiPoly::constant(c))
}

/// `c * v` as a polynomial.
fn scaled(v: Variable, c: i64) -> MultiPoly {
    MultiPoly::var(v).scale(&BigInt::from(c))
}

/// The (p,q)-integer `[m]_{p,q} = p^{m-1} + p^{m-2} q + ... + q^{m-1}`.
fn pq_integer(m: usize, p: Variable, q: Variable) -> MultiPoly {
    let mut acc = MultiPoly::zero();
    for i in 0..m {
        let mono = Monomial::unit()
            .mul_var(p, (m - 1 - i) as u32)
            .mul_var(q, i as u32);
        acc.add_term(mono, BigInt::from(1));
    }
    acc
}

/// Master polynomial for permutations: the sum over `S_n` of
/// `λ^cyc · Π_cval a_{ucross+unest} · Π_cpeak b_{lcross,lnest} ·
/// Π_cdfall c_{lcross,lnest} · Π_cdrise d_{ucross,unest} · Π_fix e_psnest`.
pub fn brute_perm_master(n: usize) -> MultiPoly {
    let mut acc = MultiPoly::zero();
    for sigma in permutations(n) {
        acc.add_term(master_monomial(&sigma, false, false), BigInt::from(1));
    }
    acc
}

/// Master polynomial for D-permutations: even fixed points carry
/// `e_psnest`, odd ones `f_psnest`.
pub fn brute_dperm_master(n: usize) -> MultiPoly {
    let mut acc = MultiPoly::zero();
    for sigma in d_permutations(2 * n, DPermClass::All) {
        acc.add_term(master_monomial(&sigma, true, false), BigInt::from(1));
    }
    acc
}

/// Variant master polynomial for D-permutations, using the primed
/// crossing/nesting statistics (and `u`/`l` interchanged on cycle valleys
/// and peaks).
pub fn brute_dperm_master_prime(n: usize) -> MultiPoly {
    let mut acc = MultiPoly::zero();
    for sigma in d_permutations(2 * n, DPermClass::All) {
        acc.add_term(master_monomial(&sigma, true, true), BigInt::from(1));
    }
    acc
}

fn master_monomial(sigma: &Permutation, split_fix_parity: bool, primed: bool) -> Monomial {
    let n = sigma.n();
    let mut mono = Monomial::unit().mul_var(vars::lambda(), sigma.cyc() as u32);
    for i in 1..=n {
        let var = match cycle_class(sigma, i) {
            CycleClass::Cval => {
                let level = if primed {
                    lcross_p(sigma, i) + lnest_p(sigma, i)
                } else {
                    ucross(sigma, i) + unest(sigma, i)
                };
                vars::a(level as u32)
            }
            CycleClass::Cpeak => {
                if primed {
                    vars::b(ucross_p(sigma, i) as u32, unest_p(sigma, i) as u32)
                } else {
                    vars::b(lcross(sigma, i) as u32, lnest(sigma, i) as u32)
                }
            }
            CycleClass::Cdfall => {
                if primed {
                    vars::c(lcross_p(sigma, i) as u32, lnest_p(sigma, i) as u32)
                } else {
                    vars::c(lcross(sigma, i) as u32, lnest(sigma, i) as u32)
                }
            }
            CycleClass::Cdrise => {
                if primed {
                    vars::d(ucross_p(sigma, i) as u32, unest_p(sigma, i) as u32)
                } else {
                    vars::d(ucross(sigma, i) as u32, unest(sigma, i) as u32)
                }
            }
            CycleClass::Fix => {
                let level = psnest(sigma, i).unwrap() as u32;
                if split_fix_parity && i % 2 == 1 {
                    vars::f(level)
                } else {
                    vars::e(level)
                }
            }
        };
        mono = mono.mul_var(var, 1);
    }
    mono
}

/// J-fraction weights of the master theorem for permutations:
/// `γ_0 = λ e_0`, `γ_n = Σ c_{n-1-ξ,ξ} + Σ d_{n-1-ξ,ξ} + λ e_n`,
/// `β_n = (λ+n-1) a_{n-1} Σ b_{n-1-ξ,ξ}`.
pub fn weights_perm_master(depth: usize) -> CfSpec {
    CfSpec::j(
        depth,
        |n| {
            let mut gamma = lam().mul(&MultiPoly::var(vars::e(n as u32)));
            for xi in 0..n {
                gamma.add_assign(&MultiPoly::var(vars::c((n - 1 - xi) as u32, xi as u32)));
                gamma.add_assign(&MultiPoly::var(vars::d((n - 1 - xi) as u32, xi as u32)));
            }
            gamma
        },
        |n| {
            let mut b_sum = MultiPoly::zero();
            for xi in 0..n {
                b_sum.add_assign(&MultiPoly::var(vars::b((n - 1 - xi) as u32, xi as u32)));
            }
            shifted(vars::lambda(), n as i64 - 1)
                .mul(&MultiPoly::var(vars::a(n as u32 - 1)))
                .mul(&b_sum)
        },
    )
}

/// T-fraction weights of the master theorem for D-permutations.
pub fn weights_dperm_master(depth: usize) -> CfSpec {
    CfSpec::t(
        depth,
        |j| {
            if j % 2 == 1 {
                let k = j.div_ceil(2);
                let mut b_sum = MultiPoly::zero();
                for xi in 0..k {
                    b_sum.add_assign(&MultiPoly::var(vars::b((k - 1 - xi) as u32, xi as u32)));
                }
                shifted(vars::lambda(), k as i64 - 1)
                    .mul(&MultiPoly::var(vars::a(k as u32 - 1)))
                    .mul(&b_sum)
            } else {
                let k = j / 2;
                let mut c_sum = lam().mul(&MultiPoly::var(vars::e(k as u32)));
                let mut d_sum = lam().mul(&MultiPoly::var(vars::f(k as u32)));
                for xi in 0..k {
                    c_sum.add_assign(&MultiPoly::var(vars::c((k - 1 - xi) as u32, xi as u32)));
                    d_sum.add_assign(&MultiPoly::var(vars::d((k - 1 - xi) as u32, xi as u32)));
                }
                c_sum.mul(&d_sum)
            }
        },
        |n| {
            if n == 1 {
                lam()
                    .mul(&lam())
                    .mul(&MultiPoly::var(vars::e(0)))
                    .mul(&MultiPoly::var(vars::f(0)))
            } else {
                MultiPoly::zero()
            }
        },
    )
}

/// The named (non-master) polynomial flavours for permutations.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum PermFlavor {
    /// Record-and-cycle classification with the `w` family on fixed
    /// points, specialised to `v1 = y1`.
    SZ,
    /// The (p,q)-generalisation, specialised to `v1 = y1`, `qp1 = pp1`.
    PQ,
}

/// Brute sum of the named permutation polynomials over `S_n`.
pub fn brute_perm_named(n: usize, flavor: PermFlavor) -> MultiPoly {
    let mut acc = MultiPoly::zero();
    for sigma in permutations(n) {
        let s = stat_vector(&sigma);
        let mut mono = named_record_cycle_monomial(&s, false);
        // per-fixed-point w weights by pseudo-nesting level
        for i in 1..=n {
            if sigma.is_fixed_point(i) {
                mono = mono.mul_var(vars::w(psnest(&sigma, i).unwrap() as u32), 1);
            }
        }
        if flavor == PermFlavor::PQ {
            mono = mono
                .mul_var(vars::pp1(), (s.ucrosscval + s.unestcval) as u32)
                .mul_var(vars::pp2(), s.ucrosscdrise as u32)
                .mul_var(vars::pm1(), s.lcrosscpeak as u32)
                .mul_var(vars::pm2(), s.lcrosscdfall as u32)
                .mul_var(vars::qp2(), s.unestcdrise as u32)
                .mul_var(vars::qm1(), s.lnestcpeak as u32)
                .mul_var(vars::qm2(), s.lnestcdfall as u32)
                .mul_var(vars::s(), s.psnest as u32);
        }
        acc.add_term(mono, BigInt::from(1));
    }
    acc
}

/// The record-and-cycle part shared by the named polynomials, with the
/// forced specialisation `v1 = y1` (both `ereccval` and `nrcval` weigh
/// `y1`). The primed variant uses the variant classification.
fn named_record_cycle_monomial(s: &StatVector, primed: bool) -> Monomial {
    let mono = Monomial::unit();
    if primed {
        mono.mul_var(vars::x1(), s.ereccpeak_prime as u32)
            .mul_var(vars::x2(), s.eareccdfall_prime as u32)
            .mul_var(vars::y1(), (s.eareccval_prime + s.nrcval_prime) as u32)
            .mul_var(vars::y2(), s.ereccdrise_prime as u32)
            .mul_var(vars::u1(), s.nrcpeak_prime as u32)
            .mul_var(vars::u2(), s.nrcdfall_prime as u32)
            .mul_var(vars::v2(), s.nrcdrise_prime as u32)
            .mul_var(vars::lambda(), s.cyc as u32)
    } else {
        mono.mul_var(vars::x1(), s.eareccpeak as u32)
            .mul_var(vars::x2(), s.eareccdfall as u32)
            .mul_var(vars::y1(), (s.ereccval + s.nrcval) as u32)
            .mul_var(vars::y2(), s.ereccdrise as u32)
            .mul_var(vars::u1(), s.nrcpeak as u32)
            .mul_var(vars::u2(), s.nrcdfall as u32)
            .mul_var(vars::v2(), s.nrcdrise as u32)
            .mul_var(vars::lambda(), s.cyc as u32)
    }
}

/// J-fraction weights for the named permutation polynomials.
pub fn weights_perm_named(flavor: PermFlavor, depth: usize) -> CfSpec {
    match flavor {
        PermFlavor::SZ => CfSpec::j(
            depth,
            |n| {
                if n == 0 {
                    lam().mul(&MultiPoly::var(vars::w(0)))
                } else {
                    let mut gamma =
                        MultiPoly::var(vars::x2()).add(&scaled(vars::u2(), n as i64 - 1));
                    gamma.add_assign(&MultiPoly::var(vars::y2()));
                    gamma.add_assign(&scaled(vars::v2(), n as i64 - 1));
                    gamma.add_assign(&lam().mul(&MultiPoly::var(vars::w(n as u32))));
                    gamma
                }
            },
            |n| {
                shifted(vars::lambda(), n as i64 - 1)
                    .mul(&MultiPoly::var(vars::x1()).add(&scaled(vars::u1(), n as i64 - 1)))
                    .mul(&MultiPoly::var(vars::y1()))
            },
        ),
        PermFlavor::PQ => CfSpec::j(
            depth,
            |n| {
                if n == 0 {
                    lam().mul(&MultiPoly::var(vars::w(0)))
                } else {
                    let x_part = MultiPoly::var(vars::x2())
                        .mul(&MultiPoly::var(vars::pm2()).pow(n as u32 - 1))
                        .add(
                            &MultiPoly::var(vars::qm2())
                                .mul(&pq_integer(n - 1, vars::pm2(), vars::qm2()))
                                .mul(&MultiPoly::var(vars::u2())),
                        );
                    let y_part = MultiPoly::var(vars::y2())
                        .mul(&MultiPoly::var(vars::pp2()).pow(n as u32 - 1))
                        .add(
                            &MultiPoly::var(vars::qp2())
                                .mul(&pq_integer(n - 1, vars::pp2(), vars::qp2()))
                                .mul(&MultiPoly::var(vars::v2())),
                        );
                    let w_part = lam()
                        .mul(&MultiPoly::var(vars::s()).pow(n as u32))
                        .mul(&MultiPoly::var(vars::w(n as u32)));
                    x_part.add(&y_part).add(&w_part)
                }
            },
            |n| {
                let x_part = MultiPoly::var(vars::x1())
                    .mul(&MultiPoly::var(vars::pm1()).pow(n as u32 - 1))
                    .add(
                        &MultiPoly::var(vars::qm1())
                            .mul(&pq_integer(n - 1, vars::pm1(), vars::qm1()))
                            .mul(&MultiPoly::var(vars::u1())),
                    );
                shifted(vars::lambda(), n as i64 - 1)
                    .mul(&x_part)
                    .mul(&MultiPoly::var(vars::pp1()).pow(n as u32 - 1))
                    .mul(&MultiPoly::var(vars::y1()))
            },
        ),
    }
}

/// The named (non-master) polynomial flavours for D-permutations.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum DpermFlavor {
    /// Parity-refined record-and-cycle classification (`v1 = y1`).
    DS,
    /// Its (p,q)-generalisation (`v1 = y1`, `qp1 = pp1`).
    PQ,
    /// Variant record classification (`v1 = y1`).
    DSprime,
    /// Variant (p,q)-generalisation.
    PQprime,
    /// Cycle-valley-minimum reformulation: `yt1^minval`, `vt1^nminval`,
    /// no λ.
    Minval,
    /// Its variant-classification counterpart.
    MinvalPrime,
}

/// Brute sum of the named D-permutation polynomials over `D_{2n}`.
pub fn brute_dperm_named(n: usize, flavor: DpermFlavor) -> MultiPoly {
    let mut acc = MultiPoly::zero();
    for sigma in d_permutations(2 * n, DPermClass::All) {
        let s = stat_vector(&sigma);
        let primed = matches!(
            flavor,
            DpermFlavor::DSprime | DpermFlavor::PQprime | DpermFlavor::MinvalPrime
        );
        let mut mono = match flavor {
            DpermFlavor::Minval | DpermFlavor::MinvalPrime => {
                minval_record_cycle_monomial(&s, primed)
            }
            _ => named_record_cycle_monomial(&s, primed),
        };
        mono = mono
            .mul_var(vars::w_e(), s.evennrfix as u32)
            .mul_var(vars::w_o(), s.oddnrfix as u32)
            .mul_var(vars::z_e(), s.evenrar as u32)
            .mul_var(vars::z_o(), s.oddrar as u32);
        match flavor {
            DpermFlavor::PQ => {
                mono = mono
                    .mul_var(vars::pm1(), s.lcrosscpeak as u32)
                    .mul_var(vars::pm2(), s.lcrosscdfall as u32)
                    .mul_var(vars::pp1(), (s.ucrosscval + s.unestcval) as u32)
                    .mul_var(vars::pp2(), s.ucrosscdrise as u32)
                    .mul_var(vars::qm1(), s.lnestcpeak as u32)
                    .mul_var(vars::qm2(), s.lnestcdfall as u32)
                    .mul_var(vars::qp2(), s.unestcdrise as u32)
                    .mul_var(vars::s_e(), s.epsnest as u32)
                    .mul_var(vars::s_o(), s.opsnest as u32);
            }
            DpermFlavor::PQprime => {
                mono = mono
                    .mul_var(vars::pm1(), s.ucrosscpeak_prime as u32)
                    .mul_var(vars::pm2(), s.lcrosscdfall_prime as u32)
                    .mul_var(vars::pp1(), (s.lcrosscval_prime + s.lnestcval_prime) as u32)
                    .mul_var(vars::pp2(), s.ucrosscdrise_prime as u32)
                    .mul_var(vars::qm1(), s.unestcpeak_prime as u32)
                    .mul_var(vars::qm2(), s.lnestcdfall_prime as u32)
                    .mul_var(vars::qp2(), s.unestcdrise_prime as u32)
                    .mul_var(vars::s_e(), s.epsnest as u32)
                    .mul_var(vars::s_o(), s.opsnest as u32);
            }
            _ => {}
        }
        acc.add_term(mono, BigInt::from(1));
    }
    acc
}

/// Record-and-cycle part of the minval flavours: `λ` is redistributed, so
/// cycle valleys weigh `yt1` (minima) or `vt1` (non-minima) and there is
/// no cycle count.
fn minval_record_cycle_monomial(s: &StatVector, primed: bool) -> Monomial {
    let mono = Monomial::unit()
        .mul_var(vars::yt1(), s.minval as u32)
        .mul_var(vars::vt1(), s.nminval as u32);
    if primed {
        mono.mul_var(vars::x1(), s.ereccpeak_prime as u32)
            .mul_var(vars::x2(), s.eareccdfall_prime as u32)
            .mul_var(vars::y2(), s.ereccdrise_prime as u32)
            .mul_var(vars::u1(), s.nrcpeak_prime as u32)
            .mul_var(vars::u2(), s.nrcdfall_prime as u32)
            .mul_var(vars::v2(), s.nrcdrise_prime as u32)
    } else {
        mono.mul_var(vars::x1(), s.eareccpeak as u32)
            .mul_var(vars::x2(), s.eareccdfall as u32)
            .mul_var(vars::y2(), s.ereccdrise as u32)
            .mul_var(vars::u1(), s.nrcpeak as u32)
            .mul_var(vars::u2(), s.nrcdfall as u32)
            .mul_var(vars::v2(), s.nrcdrise as u32)
    }
}

/// T-fraction weights for the named D-permutation polynomials. The primed
/// flavours share the plain weights.
pub fn weights_dperm_named(flavor: DpermFlavor, depth: usize) -> CfSpec {
    match flavor {
        DpermFlavor::DS | DpermFlavor::DSprime => CfSpec::t(
            depth,
            |j| {
                if j % 2 == 1 {
                    let k = j.div_ceil(2) as i64;
                    shifted(vars::lambda(), k - 1)
                        .mul(&MultiPoly::var(vars::x1()).add(&scaled(vars::u1(), k - 1)))
                        .mul(&MultiPoly::var(vars::y1()))
                } else {
                    let k = (j / 2) as i64;
                    let left = MultiPoly::var(vars::x2())
                        .add(&scaled(vars::u2(), k - 1))
                        .add(&lam().mul(&MultiPoly::var(vars::w_e())));
                    let right = MultiPoly::var(vars::y2())
                        .add(&scaled(vars::v2(), k - 1))
                        .add(&lam().mul(&MultiPoly::var(vars::w_o())));
                    left.mul(&right)
                }
            },
            |n| {
                if n == 1 {
                    lam()
                        .mul(&lam())
                        .mul(&MultiPoly::var(vars::z_e()))
                        .mul(&MultiPoly::var(vars::z_o()))
                } else {
                    MultiPoly::zero()
                }
            },
        ),
        DpermFlavor::PQ | DpermFlavor::PQprime => CfSpec::t(
            depth,
            |j| {
                if j % 2 == 1 {
                    let k = j.div_ceil(2);
                    let x_part = MultiPoly::var(vars::x1())
                        .mul(&MultiPoly::var(vars::pm1()).pow(k as u32 - 1))
                        .add(
                            &MultiPoly::var(vars::qm1())
                                .mul(&pq_integer(k - 1, vars::pm1(), vars::qm1()))
                                .mul(&MultiPoly::var(vars::u1())),
                        );
                    shifted(vars::lambda(), k as i64 - 1)
                        .mul(&MultiPoly::var(vars::pp1()).pow(k as u32 - 1))
                        .mul(&MultiPoly::var(vars::y1()))
                        .mul(&x_part)
                } else {
                    let k = j / 2;
                    let left = MultiPoly::var(vars::x2())
                        .mul(&MultiPoly::var(vars::pm2()).pow(k as u32 - 1))
                        .add(
                            &MultiPoly::var(vars::qm2())
                                .mul(&pq_integer(k - 1, vars::pm2(), vars::qm2()))
                                .mul(&MultiPoly::var(vars::u2())),
                        )
                        .add(
                            &lam()
                                .mul(&MultiPoly::var(vars::s_e()).pow(k as u32))
                                .mul(&MultiPoly::var(vars::w_e())),
                        );
                    let right = MultiPoly::var(vars::y2())
                        .mul(&MultiPoly::var(vars::pp2()).pow(k as u32 - 1))
                        .add(
                            &MultiPoly::var(vars::qp2())
                                .mul(&pq_integer(k - 1, vars::pp2(), vars::qp2()))
                                .mul(&MultiPoly::var(vars::v2())),
                        )
                        .add(
                            &lam()
                                .mul(&MultiPoly::var(vars::s_o()).pow(k as u32))
                                .mul(&MultiPoly::var(vars::w_o())),
                        );
                    left.mul(&right)
                }
            },
            |n| {
                if n == 1 {
                    lam()
                        .mul(&lam())
                        .mul(&MultiPoly::var(vars::z_e()))
                        .mul(&MultiPoly::var(vars::z_o()))
                } else {
                    MultiPoly::zero()
                }
            },
        ),
        DpermFlavor::Minval | DpermFlavor::MinvalPrime => CfSpec::t(
            depth,
            |j| {
                if j % 2 == 1 {
                    let k = j.div_ceil(2) as i64;
                    MultiPoly::var(vars::x1())
                        .add(&scaled(vars::u1(), k - 1))
                        .mul(&MultiPoly::var(vars::yt1()).add(&scaled(vars::vt1(), k - 1)))
                } else {
                    let k = (j / 2) as i64;
                    let left = MultiPoly::var(vars::x2())
                        .add(&scaled(vars::u2(), k - 1))
                        .add(&MultiPoly::var(vars::w_e()));
                    let right = MultiPoly::var(vars::y2())
                        .add(&scaled(vars::v2(), k - 1))
                        .add(&MultiPoly::var(vars::w_o()));
                    left.mul(&right)
                }
            },
            |n| {
                if n == 1 {
                    MultiPoly::var(vars::z_e()).mul(&MultiPoly::var(vars::z_o()))
                } else {
                    MultiPoly::zero()
                }
            },
        ),
    }
}

/// Brute sum of the D-cycle polynomial over the one-cycle D-permutations
/// of `[2n]`, specialised to `v1 = y1`.
pub fn brute_dcycle(n: usize) -> MultiPoly {
    let mut acc = MultiPoly::zero();
    for sigma in d_permutations(2 * n, DPermClass::Cycle) {
        let s = stat_vector(&sigma);
        let mono = Monomial::unit()
            .mul_var(vars::x1(), s.eareccpeak as u32)
            .mul_var(vars::x2(), s.eareccdfall as u32)
            .mul_var(vars::y1(), (s.ereccval + s.nrcval) as u32)
            .mul_var(vars::y2(), s.ereccdrise as u32)
            .mul_var(vars::u1(), s.nrcpeak as u32)
            .mul_var(vars::u2(), s.nrcdfall as u32)
            .mul_var(vars::v2(), s.nrcdrise as u32);
        acc.add_term(mono, BigInt::from(1));
    }
    acc
}

/// S-fraction weights of the D-cycle corollary; the series carries an
/// overall prefactor `x1 y1` and its `t^n` coefficient is the D-cycle
/// polynomial of `[2(n+1)]`.
pub fn weights_dcycle(depth: usize) -> CfSpec {
    CfSpec::s(depth, |j| {
        if j % 2 == 1 {
            let k = j.div_ceil(2) as i64;
            MultiPoly::var(vars::x2())
                .add(&scaled(vars::u2(), k - 1))
                .mul(&MultiPoly::var(vars::y2()).add(&scaled(vars::v2(), k - 1)))
        } else {
            let k = (j / 2) as i64;
            MultiPoly::var(vars::x1())
                .add(&scaled(vars::u1(), k))
                .mul(&scaled(vars::y1(), k))
        }
    })
}

/// The two Randrianarivony–Zeng polynomials over D-o-semiderangements:
/// `G_n` on `(minval, ereccpeak', evennrfix, eareccdfall')` and `R_n` on
/// `(lema, romi, fix, remi)`.
pub fn brute_rz(n: usize) -> (MultiPoly, MultiPoly) {
    let mut g = MultiPoly::zero();
    let mut r = MultiPoly::zero();
    for sigma in d_permutations(2 * n, DPermClass::OSemiderangement) {
        let s = stat_vector(&sigma);
        let rz = crate::stats::rz_stats(&sigma).unwrap();
        g.add_term(
            Monomial::unit()
                .mul_var(vars::x(), s.minval as u32)
                .mul_var(vars::y(), s.ereccpeak_prime as u32)
                .mul_var(vars::xbar(), s.evennrfix as u32)
                .mul_var(vars::ybar(), s.eareccdfall_prime as u32),
            BigInt::from(1),
        );
        r.add_term(
            Monomial::unit()
                .mul_var(vars::x(), rz.lema as u32)
                .mul_var(vars::y(), rz.romi as u32)
                .mul_var(vars::xbar(), rz.fix as u32)
                .mul_var(vars::ybar(), rz.remi as u32),
            BigInt::from(1),
        );
    }
    (g, r)
}

/// S-fraction weights of the Randrianarivony–Zeng corollary:
/// `α_{2k-1} = (x+k-1)(y+k-1)`, `α_{2k} = k(x̄+ȳ+k-1)`.
pub fn weights_rz(depth: usize) -> CfSpec {
    CfSpec::s(depth, |j| {
        if j % 2 == 1 {
            let k = j.div_ceil(2) as i64;
            shifted(vars::x(), k - 1).mul(&shifted(vars::y(), k - 1))
        } else {
            let k = (j / 2) as i64;
            MultiPoly::var(vars::xbar())
                .add(&MultiPoly::var(vars::ybar()))
                .add(&MultiPoly::constant(k - 1))
                .scale(&BigInt::from(k))
        }
    })
}

/// Substitution targets of the master polynomials.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum SpecialiseFlavor {
    PermPQ,
    PermSZ,
    DpermPQ,
    DpermDS,
}

/// The specialisation sending a master polynomial onto the corresponding
/// named polynomial: substituting it into `brute_*_master` reproduces
/// `brute_*_named` exactly.
pub fn specialise_master_to(flavor: SpecialiseFlavor) -> impl Fn(&Variable) -> Option<MultiPoly> {
    use crate::poly::Family;
    move |v: &Variable| {
        let idx = v.indices();
        let pq = matches!(flavor, SpecialiseFlavor::PermPQ | SpecialiseFlavor::DpermPQ);
        let dperm = matches!(flavor, SpecialiseFlavor::DpermPQ | SpecialiseFlavor::DpermDS);
        match v.family() {
            Family::A => {
                let base = MultiPoly::var(vars::y1());
                Some(if pq {
                    base.mul_var(vars::pp1(), idx[0])
                } else {
                    base
                })
            }
            Family::B | Family::C | Family::D => {
                let (exclusive, shared, p, q) = match v.family() {
                    Family::B => (vars::x1(), vars::u1(), vars::pm1(), vars::qm1()),
                    Family::C => (vars::x2(), vars::u2(), vars::pm2(), vars::qm2()),
                    _ => (vars::y2(), vars::v2(), vars::pp2(), vars::qp2()),
                };
                let base = if idx[1] == 0 {
                    MultiPoly::var(exclusive)
                } else {
                    MultiPoly::var(shared)
                };
                Some(if pq {
                    base.mul_var(p, idx[0]).mul_var(q, idx[1])
                } else {
                    base
                })
            }
            Family::E => Some(match (dperm, idx[0]) {
                (false, l) => {
                    let base = MultiPoly::var(vars::w(l));
                    if pq {
                        base.mul_var(vars::s(), l)
                    } else {
                        base
                    }
                }
                (true, 0) => MultiPoly::var(vars::z_e()),
                (true, l) => {
                    let base = MultiPoly::var(vars::w_e());
                    if pq {
                        base.mul_var(vars::s_e(), l)
                    } else {
                        base
                    }
                }
            }),
            Family::F => Some(match idx[0] {
                0 => MultiPoly::var(vars::z_o()),
                l => {
                    let base = MultiPoly::var(vars::w_o());
                    if pq {
                        base.mul_var(vars::s_o(), l)
                    } else {
                        base
                    }
                }
            }),
            _ => None,
        }
    }
}

/// Outcome of checking one theorem at every size up to `n_checked`.
#[derive(Clone, Debug, Serialize)]
pub struct VerifyReport {
    pub theorem: TheoremId,
    pub n_checked: usize,
    pub pass: bool,
    pub first_discrepancy: Option<Discrepancy>,
}

#[derive(Clone, Debug, Serialize)]
pub struct Discrepancy {
    pub n: usize,
    pub lhs: String,
    pub rhs: String,
}

impl VerifyReport {
    fn pass(theorem: TheoremId, n_checked: usize) -> VerifyReport {
        VerifyReport {
            theorem,
            n_checked,
            pass: true,
            first_discrepancy: None,
        }
    }

    fn fail(theorem: TheoremId, n_checked: usize, n: usize, lhs: &MultiPoly, rhs: &MultiPoly) -> VerifyReport {
        VerifyReport {
            theorem,
            n_checked,
            pass: false,
            first_discrepancy: Some(Discrepancy {
                n,
                lhs: lhs.to_string(),
                rhs: rhs.to_string(),
            }),
        }
    }
}

/// Check one theorem by brute force against its continued fraction for
/// every `n ≤ n_max` (exact multivariate polynomial equality throughout).
/// Theorems with a primed companion also check the companion identity.
pub fn verify(id: TheoremId, n_max: usize) -> VerifyReport {
    // One level beyond sufficiency as a guard; the recurrence cross-check
    // inside `expand_recurrence` relies on it too.
    let depth = n_max + 2;
    let compare = |brute: &dyn Fn(usize) -> MultiPoly, cf: &CfSpec| -> VerifyReport {
        let series = expand(cf, n_max);
        for n in 0..=n_max {
            let lhs = brute(n);
            let rhs = series.coeff(n);
            if &lhs != rhs {
                return VerifyReport::fail(id, n_max, n, &lhs, rhs);
            }
        }
        VerifyReport::pass(id, n_max)
    };
    match id {
        TheoremId::PermMaster => compare(&brute_perm_master, &weights_perm_master(depth)),
        TheoremId::PermPQ => compare(
            &|n| brute_perm_named(n, PermFlavor::PQ),
            &weights_perm_named(PermFlavor::PQ, depth),
        ),
        TheoremId::PermSZ => compare(
            &|n| brute_perm_named(n, PermFlavor::SZ),
            &weights_perm_named(PermFlavor::SZ, depth),
        ),
        TheoremId::DpermMaster => compare(&brute_dperm_master, &weights_dperm_master(depth)),
        TheoremId::DpermPQ => compare(
            &|n| brute_dperm_named(n, DpermFlavor::PQ),
            &weights_dperm_named(DpermFlavor::PQ, depth),
        ),
        TheoremId::DpermDS => compare(
            &|n| brute_dperm_named(n, DpermFlavor::DS),
            &weights_dperm_named(DpermFlavor::DS, depth),
        ),
        TheoremId::DpermMasterPrime => {
            // brute Q̂'_n must equal brute Q̂_n on top of the CF match
            for n in 0..=n_max {
                let primed = brute_dperm_master_prime(n);
                let plain = brute_dperm_master(n);
                if primed != plain {
                    return VerifyReport::fail(id, n_max, n, &primed, &plain);
                }
            }
            compare(&brute_dperm_master_prime, &weights_dperm_master(depth))
        }
        TheoremId::DpermPQPrime => {
            for n in 0..=n_max {
                let primed = brute_dperm_named(n, DpermFlavor::PQprime);
                let plain = brute_dperm_named(n, DpermFlavor::PQ);
                if primed != plain {
                    return VerifyReport::fail(id, n_max, n, &primed, &plain);
                }
            }
            compare(
                &|n| brute_dperm_named(n, DpermFlavor::PQprime),
                &weights_dperm_named(DpermFlavor::PQprime, depth),
            )
        }
        TheoremId::DpermPrime => {
            for n in 0..=n_max {
                let primed = brute_dperm_named(n, DpermFlavor::DSprime);
                let plain = brute_dperm_named(n, DpermFlavor::DS);
                if primed != plain {
                    return VerifyReport::fail(id, n_max, n, &primed, &plain);
                }
            }
            compare(
                &|n| brute_dperm_named(n, DpermFlavor::DSprime),
                &weights_dperm_named(DpermFlavor::DSprime, depth),
            )
        }
        TheoremId::DCycle => {
            // The series x1·y1·S(α) has t^n coefficient P^DC_{n+1}; the
            // λ¹ extraction from the DS polynomial gives the same family.
            let series = expand(&weights_dcycle(2 * depth), n_max.saturating_sub(1));
            let prefactor = MultiPoly::var(vars::x1()).mul(&MultiPoly::var(vars::y1()));
            for n in 1..=n_max {
                let lhs = brute_dcycle(n);
                let rhs = prefactor.mul(series.coeff(n - 1));
                if lhs != rhs {
                    return VerifyReport::fail(id, n_max, n, &lhs, &rhs);
                }
                let extracted =
                    brute_dperm_named(n, DpermFlavor::DS).coefficient_of(&vars::lambda(), 1);
                if extracted != lhs {
                    return VerifyReport::fail(id, n_max, n, &extracted, &lhs);
                }
            }
            VerifyReport::pass(id, n_max)
        }
        TheoremId::Minval => compare(
            &|n| brute_dperm_named(n, DpermFlavor::Minval),
            &weights_dperm_named(DpermFlavor::Minval, depth),
        ),
        TheoremId::MinvalPrime => {
            for n in 0..=n_max {
                let primed = brute_dperm_named(n, DpermFlavor::MinvalPrime);
                let plain = brute_dperm_named(n, DpermFlavor::Minval);
                if primed != plain {
                    return VerifyReport::fail(id, n_max, n, &primed, &plain);
                }
            }
            compare(
                &|n| brute_dperm_named(n, DpermFlavor::MinvalPrime),
                &weights_dperm_named(DpermFlavor::MinvalPrime, depth),
            )
        }
        TheoremId::RZ => {
            let series = expand(&weights_rz(2 * depth), n_max);
            for n in 0..=n_max {
                let (g, r) = brute_rz(n);
                if g != r {
                    return VerifyReport::fail(id, n_max, n, &g, &r);
                }
                let rhs = series.coeff(n);
                if &g != rhs {
                    return VerifyReport::fail(id, n_max, n, &g, rhs);
                }
            }
            VerifyReport::pass(id, n_max)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::MultiPoly;

    fn p(s: &str) -> MultiPoly {
        s.parse().unwrap()
    }

    #[test]
    fn perm_master_small_values() {
        assert_eq!(brute_perm_master(0), MultiPoly::one());
        assert_eq!(brute_perm_master(1), p("λ*e[0]"));
        assert_eq!(brute_perm_master(2), p("λ^2*e[0]^2 + λ*a[0]*b[0,0]"));
        // n = 2 must equal γ_0² + β_1 of the weight scheme
        let cf = weights_perm_master(4);
        let expected = cf.gamma(0).mul(cf.gamma(0)).add(cf.beta(1));
        assert_eq!(brute_perm_master(2), expected);
    }

    #[test]
    fn perm_master_weights_match_the_displayed_fraction() {
        let cf = weights_perm_master(5);
        assert_eq!(cf.beta(1), &p("λ*a[0]*b[0,0]"));
        assert_eq!(cf.gamma(1), &p("c[0,0] + d[0,0] + λ*e[1]"));
        assert_eq!(
            cf.beta(3),
            &p("λ*a[2]*b[0,2] + λ*a[2]*b[1,1] + λ*a[2]*b[2,0] \
                + 2*a[2]*b[0,2] + 2*a[2]*b[1,1] + 2*a[2]*b[2,0]")
        );
    }

    #[test]
    fn perm_named_small_values() {
        assert_eq!(brute_perm_named(1, PermFlavor::SZ), p("λ*w[0]"));
        let cf = weights_perm_named(PermFlavor::SZ, 4);
        assert_eq!(cf.gamma(0), &p("λ*w[0]"));
        // t² coefficient of the CF is γ_0² + β_1 = λ²w0² + λ x1 y1
        let series = expand(&cf, 2);
        assert_eq!(series.coeff(2), &p("λ^2*w[0]^2 + λ*x1*y1"));

        let cf = weights_perm_named(PermFlavor::PQ, 4);
        assert_eq!(cf.beta(2), &p("λ*pm1*pp1*x1*y1 + λ*pp1*qm1*u1*y1 \
            + pm1*pp1*x1*y1 + pp1*qm1*u1*y1"));
    }

    #[test]
    fn dperm_master_small_values() {
        assert_eq!(brute_dperm_master(0), MultiPoly::one());
        assert_eq!(brute_dperm_master(1), p("λ^2*e[0]*f[0] + λ*a[0]*b[0,0]"));
        let cf = weights_dperm_master(4);
        assert_eq!(
            brute_dperm_master(1),
            cf.delta(1).add(cf.alpha(1))
        );
        assert_eq!(cf.alpha(2), &p("c[0,0]*d[0,0] + λ*c[0,0]*f[1] + λ*d[0,0]*e[1] + λ^2*e[1]*f[1]"));
    }

    #[test]
    fn dperm_named_small_values() {
        assert_eq!(
            brute_dperm_named(1, DpermFlavor::DS),
            p("λ^2*z_e*z_o + λ*x1*y1")
        );
        assert_eq!(
            brute_dperm_named(1, DpermFlavor::DSprime),
            brute_dperm_named(1, DpermFlavor::DS)
        );
        let cf = weights_dperm_named(DpermFlavor::Minval, 4);
        assert_eq!(cf.alpha(1), &p("x1*yt1"));
        assert_eq!(cf.delta(1), &p("z_e*z_o"));
    }

    #[test]
    fn dcycle_small_values() {
        assert_eq!(brute_dcycle(0), MultiPoly::zero());
        assert_eq!(brute_dcycle(1), p("x1*y1"));
        let cf = weights_dcycle(6);
        assert_eq!(cf.alpha(1), &p("x2*y2"));
        assert_eq!(cf.alpha(2), &p("x1*y1 + u1*y1"));
    }

    #[test]
    fn rz_small_values() {
        let (g1, r1) = brute_rz(1);
        assert_eq!(g1, p("x*y"));
        assert_eq!(r1, p("x*y"));
        let cf = weights_rz(6);
        assert_eq!(cf.alpha(1), &p("x*y"));
        assert_eq!(cf.alpha(2), &p("xbar + ybar"));
        assert_eq!(cf.alpha(3), &p("x*y + x + y + 1"));
    }

    #[test]
    fn specialisation_examples() {
        let subst = specialise_master_to(SpecialiseFlavor::PermPQ);
        assert_eq!(subst(&vars::b(3, 0)), Some(p("pm1^3*x1")));
        assert_eq!(subst(&vars::b(0, 2)), Some(p("qm1^2*u1")));
        assert_eq!(subst(&vars::e(2)), Some(p("s^2*w[2]")));
        let subst = specialise_master_to(SpecialiseFlavor::PermSZ);
        assert_eq!(subst(&vars::b(3, 0)), Some(p("x1")));
        let subst = specialise_master_to(SpecialiseFlavor::DpermDS);
        assert_eq!(subst(&vars::e(0)), Some(p("z_e")));
        assert_eq!(subst(&vars::e(1)), Some(p("w_e")));
        assert_eq!(subst(&vars::f(0)), Some(p("z_o")));
        let subst = specialise_master_to(SpecialiseFlavor::DpermPQ);
        assert_eq!(subst(&vars::f(2)), Some(p("s_o^2*w_o")));
    }

    #[test]
    fn specialised_master_equals_named_brute() {
        for n in 0..=3 {
            let master = brute_perm_master(n);
            assert_eq!(
                master.substitute(specialise_master_to(SpecialiseFlavor::PermPQ)),
                brute_perm_named(n, PermFlavor::PQ),
                "PermPQ at n={n}"
            );
            assert_eq!(
                master.substitute(specialise_master_to(SpecialiseFlavor::PermSZ)),
                brute_perm_named(n, PermFlavor::SZ),
                "PermSZ at n={n}"
            );
            let dmaster = brute_dperm_master(n);
            assert_eq!(
                dmaster.substitute(specialise_master_to(SpecialiseFlavor::DpermPQ)),
                brute_dperm_named(n, DpermFlavor::PQ),
                "DpermPQ at n={n}"
            );
            assert_eq!(
                dmaster.substitute(specialise_master_to(SpecialiseFlavor::DpermDS)),
                brute_dperm_named(n, DpermFlavor::DS),
                "DpermDS at n={n}"
            );
        }
    }

    #[test]
    fn all_theorems_pass_at_small_sizes() {
        for id in TheoremId::ALL {
            let n_max = match id {
                TheoremId::PermMaster | TheoremId::PermPQ | TheoremId::PermSZ => 4,
                _ => 3,
            };
            let report = verify(id, n_max);
            assert!(report.pass, "{id}: {:?}", report.first_discrepancy);
        }
    }

    #[test]
    fn numeric_collapse_gives_the_counting_sequences() {
        // λ = 1 and all families = 1 collapse the master polynomials to
        // cardinalities.
        let ones = |_v: &Variable| Some(MultiPoly::one());
        for n in 0..=4 {
            let total = brute_perm_master(n).substitute(ones);
            let expected: i64 = (1..=n as i64).product();
            assert_eq!(total, MultiPoly::constant(expected));
        }
        let medians = crate::cfrac::median_genocchi(5);
        for n in 0..=3 {
            let total = brute_dperm_master(n).substitute(ones);
            assert_eq!(total.constant_value().unwrap(), medians[n + 1]);
        }
    }
}
