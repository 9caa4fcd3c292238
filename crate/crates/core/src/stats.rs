//! Permutation statistics: the record and cycle classifications (plain,
//! variant, parity-refined), index-refined crossings and nestings with their
//! primed variants, pseudo-nestings of fixed points, and cycle-valley
//! minima.
//!
//! All crossing/nesting statistics are literal scans of the defining
//! quadruplet sets. At desk scale (n ≤ 14) this is cheap, and the literal
//! scan doubles as the oracle for everything built on top.

use serde::Serialize;

use crate::perm::{PermError, Permutation};

/// Cycle classification of an index: compares `σ⁻¹(i), i, σ(i)`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum CycleClass {
    /// `σ⁻¹(i) < i > σ(i)`
    Cpeak,
    /// `σ⁻¹(i) > i < σ(i)`
    Cval,
    /// `σ⁻¹(i) < i < σ(i)`
    Cdrise,
    /// `σ⁻¹(i) > i > σ(i)`
    Cdfall,
    /// `σ(i) = i`
    Fix,
}

/// Record classification of a position.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum RecordClass {
    /// Record but not antirecord.
    Erec,
    /// Antirecord but not record.
    Earec,
    /// Both (pivot).
    Rar,
    /// Neither.
    Nrar,
}

pub fn cycle_class(sigma: &Permutation, i: usize) -> CycleClass {
    assert!(i >= 1 && i <= sigma.n(), "index {i} out of range");
    let prev = sigma.inverse_apply(i);
    let next = sigma.apply(i);
    if next == i {
        CycleClass::Fix
    } else if prev < i && i > next {
        CycleClass::Cpeak
    } else if prev > i && i < next {
        CycleClass::Cval
    } else if prev < i && i < next {
        CycleClass::Cdrise
    } else {
        CycleClass::Cdfall
    }
}

/// Is position `i` a record (left-to-right maximum)?
pub fn is_record(sigma: &Permutation, i: usize) -> bool {
    (1..i).all(|j| sigma.apply(j) < sigma.apply(i))
}

/// Is position `i` an antirecord (right-to-left minimum)?
pub fn is_antirecord(sigma: &Permutation, i: usize) -> bool {
    (i + 1..=sigma.n()).all(|j| sigma.apply(j) > sigma.apply(i))
}

pub fn record_class(sigma: &Permutation, i: usize) -> RecordClass {
    assert!(i >= 1 && i <= sigma.n(), "index {i} out of range");
    match (is_record(sigma, i), is_antirecord(sigma, i)) {
        (true, false) => RecordClass::Erec,
        (false, true) => RecordClass::Earec,
        (true, true) => RecordClass::Rar,
        (false, false) => RecordClass::Nrar,
    }
}

/// Variant scheme: the value `i` is classified via the record class of the
/// position `σ⁻¹(i)`.
pub fn variant_record_class(sigma: &Permutation, i: usize) -> RecordClass {
    record_class(sigma, sigma.inverse_apply(i))
}

/// `ucross(j,σ) = #{ i<j<k<l : k = σ(i), l = σ(j) }`.
pub fn ucross(sigma: &Permutation, j: usize) -> usize {
    let l = sigma.apply(j);
    if l <= j {
        return 0;
    }
    (1..j)
        .filter(|&i| {
            let k = sigma.apply(i);
            j < k && k < l
        })
        .count()
}

/// `unest(j,σ) = #{ i<j<k<l : k = σ(j), l = σ(i) }`.
pub fn unest(sigma: &Permutation, j: usize) -> usize {
    let k = sigma.apply(j);
    if k <= j {
        return 0;
    }
    (1..j).filter(|&i| sigma.apply(i) > k).count()
}

/// `lcross(k,σ) = #{ i<j<k<l : i = σ(k), j = σ(l) }`.
pub fn lcross(sigma: &Permutation, k: usize) -> usize {
    let n = sigma.n();
    let i = sigma.apply(k);
    if i >= k {
        return 0;
    }
    (k + 1..=n)
        .filter(|&l| {
            let j = sigma.apply(l);
            i < j && j < k
        })
        .count()
}

/// `lnest(k,σ) = #{ i<j<k<l : i = σ(l), j = σ(k) }`.
pub fn lnest(sigma: &Permutation, k: usize) -> usize {
    let n = sigma.n();
    let j = sigma.apply(k);
    if j >= k {
        return 0;
    }
    (k + 1..=n).filter(|&l| sigma.apply(l) < j).count()
}

/// `ucross'(k,σ)`: same quadruplets as `ucross`, counted at the third
/// position.
pub fn ucross_p(sigma: &Permutation, k: usize) -> usize {
    let i = sigma.inverse_apply(k);
    if i >= k {
        return 0;
    }
    // quadruplets i < j < k < l with k = σ(i), l = σ(j)
    (i + 1..k)
        .filter(|&j| sigma.apply(j) > k)
        .count()
}

/// `unest'(k,σ)`: nestings counted at the third position.
pub fn unest_p(sigma: &Permutation, k: usize) -> usize {
    let j = sigma.inverse_apply(k);
    if j >= k {
        return 0;
    }
    // quadruplets i < j < k < l with k = σ(j), l = σ(i)
    (1..j).filter(|&i| sigma.apply(i) > k).count()
}

/// `lcross'(j,σ)`: lower crossings counted at the second position.
pub fn lcross_p(sigma: &Permutation, j: usize) -> usize {
    let l = sigma.inverse_apply(j);
    if l <= j {
        return 0;
    }
    // quadruplets i < j < k < l with i = σ(k), j = σ(l)
    (j + 1..l)
        .filter(|&k| sigma.apply(k) < j)
        .count()
}

/// `lnest'(j,σ)`: lower nestings counted at the second position.
pub fn lnest_p(sigma: &Permutation, j: usize) -> usize {
    let n = sigma.n();
    let k = sigma.inverse_apply(j);
    if k <= j {
        return 0;
    }
    // quadruplets i < j < k < l with i = σ(l), j = σ(k)
    (k + 1..=n).filter(|&l| sigma.apply(l) < j).count()
}

/// Pseudo-nestings of a fixed point: `#{j<i : σ(j)>i}`, which equals
/// `#{j>i : σ(j)<i}`. Errors if `i` is not a fixed point.
pub fn psnest(sigma: &Permutation, i: usize) -> Result<usize, PermError> {
    if i == 0 || i > sigma.n() {
        return Err(PermError::IndexOutOfRange(i));
    }
    if !sigma.is_fixed_point(i) {
        return Err(PermError::NotAFixedPoint(i));
    }
    Ok((1..i).filter(|&j| sigma.apply(j) > i).count())
}

/// Total upper pseudo-nestings: pairs `i < j < l` with `σ(j) = j`,
/// `σ(i) = l`. Independent triplet scan, used to cross-check `psnest`.
pub fn upsnest(sigma: &Permutation) -> usize {
    let n = sigma.n();
    let mut count = 0;
    for j in 1..=n {
        if !sigma.is_fixed_point(j) {
            continue;
        }
        for i in 1..j {
            if sigma.apply(i) > j {
                count += 1;
            }
        }
    }
    count
}

/// Total lower pseudo-nestings: pairs `i < j < l` with `σ(j) = j`,
/// `i = σ(l)`.
pub fn lpsnest(sigma: &Permutation) -> usize {
    let n = sigma.n();
    let mut count = 0;
    for j in 1..=n {
        if !sigma.is_fixed_point(j) {
            continue;
        }
        for l in j + 1..=n {
            if sigma.apply(l) < j {
                count += 1;
            }
        }
    }
    count
}

/// Every named statistic of a permutation, all computed by the literal
/// per-index scans. Redundant on purpose: the redundancy is exploited by
/// the invariant test suite.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct StatVector {
    pub n: usize,
    // cycle classification
    pub cpeak: usize,
    pub cval: usize,
    pub cdrise: usize,
    pub cdfall: usize,
    pub fix: usize,
    // record-and-cycle classification (10 categories)
    pub eareccpeak: usize,
    pub nrcpeak: usize,
    pub ereccval: usize,
    pub nrcval: usize,
    pub ereccdrise: usize,
    pub nrcdrise: usize,
    pub eareccdfall: usize,
    pub nrcdfall: usize,
    pub rar: usize,
    pub nrfix: usize,
    // variant record-and-cycle classification (10 categories)
    pub ereccpeak_prime: usize,
    pub nrcpeak_prime: usize,
    pub eareccval_prime: usize,
    pub nrcval_prime: usize,
    pub ereccdrise_prime: usize,
    pub nrcdrise_prime: usize,
    pub eareccdfall_prime: usize,
    pub nrcdfall_prime: usize,
    pub rar_prime: usize,
    pub nrfix_prime: usize,
    // parity refinement of fixed-point categories
    pub evenrar: usize,
    pub oddrar: usize,
    pub evennrfix: usize,
    pub oddnrfix: usize,
    // cycle-minimum refinement
    pub cyc: usize,
    pub minval: usize,
    pub maxpeak: usize,
    pub nminval: usize,
    pub nmaxpeak: usize,
    // pseudo-nesting totals
    pub psnest: usize,
    pub epsnest: usize,
    pub opsnest: usize,
    // refined crossings/nestings
    pub ucrosscval: usize,
    pub ucrosscdrise: usize,
    pub lcrosscpeak: usize,
    pub lcrosscdfall: usize,
    pub unestcval: usize,
    pub unestcdrise: usize,
    pub lnestcpeak: usize,
    pub lnestcdfall: usize,
    // primed refined crossings/nestings
    pub ucrosscpeak_prime: usize,
    pub ucrosscdrise_prime: usize,
    pub lcrosscval_prime: usize,
    pub lcrosscdfall_prime: usize,
    pub unestcpeak_prime: usize,
    pub unestcdrise_prime: usize,
    pub lnestcval_prime: usize,
    pub lnestcdfall_prime: usize,
}

pub fn stat_vector(sigma: &Permutation) -> StatVector {
    let n = sigma.n();
    let mut s = StatVector {
        n,
        cpeak: 0,
        cval: 0,
        cdrise: 0,
        cdfall: 0,
        fix: 0,
        eareccpeak: 0,
        nrcpeak: 0,
        ereccval: 0,
        nrcval: 0,
        ereccdrise: 0,
        nrcdrise: 0,
        eareccdfall: 0,
        nrcdfall: 0,
        rar: 0,
        nrfix: 0,
        ereccpeak_prime: 0,
        nrcpeak_prime: 0,
        eareccval_prime: 0,
        nrcval_prime: 0,
        ereccdrise_prime: 0,
        nrcdrise_prime: 0,
        eareccdfall_prime: 0,
        nrcdfall_prime: 0,
        rar_prime: 0,
        nrfix_prime: 0,
        evenrar: 0,
        oddrar: 0,
        evennrfix: 0,
        oddnrfix: 0,
        cyc: sigma.cyc(),
        minval: 0,
        maxpeak: 0,
        nminval: 0,
        nmaxpeak: 0,
        psnest: 0,
        epsnest: 0,
        opsnest: 0,
        ucrosscval: 0,
        ucrosscdrise: 0,
        lcrosscpeak: 0,
        lcrosscdfall: 0,
        unestcval: 0,
        unestcdrise: 0,
        lnestcpeak: 0,
        lnestcdfall: 0,
        ucrosscpeak_prime: 0,
        ucrosscdrise_prime: 0,
        lcrosscval_prime: 0,
        lcrosscdfall_prime: 0,
        unestcpeak_prime: 0,
        unestcdrise_prime: 0,
        lnestcval_prime: 0,
        lnestcdfall_prime: 0,
    };

    let mut cycle_min = vec![false; n + 1];
    let mut cycle_max = vec![false; n + 1];
    for cycle in sigma.cycles() {
        if cycle.len() >= 2 {
            cycle_min[*cycle.iter().min().unwrap()] = true;
            cycle_max[*cycle.iter().max().unwrap()] = true;
        }
    }

    for i in 1..=n {
        let cc = cycle_class(sigma, i);
        let rc = record_class(sigma, i);
        let vc = variant_record_class(sigma, i);
        match cc {
            CycleClass::Cpeak => s.cpeak += 1,
            CycleClass::Cval => s.cval += 1,
            CycleClass::Cdrise => s.cdrise += 1,
            CycleClass::Cdfall => s.cdfall += 1,
            CycleClass::Fix => s.fix += 1,
        }
        match (rc, cc) {
            (RecordClass::Earec, CycleClass::Cpeak) => s.eareccpeak += 1,
            (RecordClass::Nrar, CycleClass::Cpeak) => s.nrcpeak += 1,
            (RecordClass::Erec, CycleClass::Cval) => s.ereccval += 1,
            (RecordClass::Nrar, CycleClass::Cval) => s.nrcval += 1,
            (RecordClass::Erec, CycleClass::Cdrise) => s.ereccdrise += 1,
            (RecordClass::Nrar, CycleClass::Cdrise) => s.nrcdrise += 1,
            (RecordClass::Earec, CycleClass::Cdfall) => s.eareccdfall += 1,
            (RecordClass::Nrar, CycleClass::Cdfall) => s.nrcdfall += 1,
            (RecordClass::Rar, CycleClass::Fix) => s.rar += 1,
            (RecordClass::Nrar, CycleClass::Fix) => s.nrfix += 1,
            other => unreachable!("impossible record/cycle combination {other:?}"),
        }
        match (vc, cc) {
            (RecordClass::Erec, CycleClass::Cpeak) => s.ereccpeak_prime += 1,
            (RecordClass::Nrar, CycleClass::Cpeak) => s.nrcpeak_prime += 1,
            (RecordClass::Earec, CycleClass::Cval) => s.eareccval_prime += 1,
            (RecordClass::Nrar, CycleClass::Cval) => s.nrcval_prime += 1,
            (RecordClass::Erec, CycleClass::Cdrise) => s.ereccdrise_prime += 1,
            (RecordClass::Nrar, CycleClass::Cdrise) => s.nrcdrise_prime += 1,
            (RecordClass::Earec, CycleClass::Cdfall) => s.eareccdfall_prime += 1,
            (RecordClass::Nrar, CycleClass::Cdfall) => s.nrcdfall_prime += 1,
            (RecordClass::Rar, CycleClass::Fix) => s.rar_prime += 1,
            (RecordClass::Nrar, CycleClass::Fix) => s.nrfix_prime += 1,
            other => unreachable!("impossible variant record/cycle combination {other:?}"),
        }
        if cc == CycleClass::Fix {
            let level = psnest(sigma, i).unwrap();
            s.psnest += level;
            if i % 2 == 0 {
                s.epsnest += level;
            } else {
                s.opsnest += level;
            }
            match (rc, i % 2 == 0) {
                (RecordClass::Rar, true) => s.evenrar += 1,
                (RecordClass::Rar, false) => s.oddrar += 1,
                (_, true) => s.evennrfix += 1,
                (_, false) => s.oddnrfix += 1,
            }
        }
        match cc {
            CycleClass::Cval => {
                s.ucrosscval += ucross(sigma, i);
                s.unestcval += unest(sigma, i);
                if cycle_min[i] {
                    s.minval += 1;
                } else {
                    s.nminval += 1;
                }
            }
            CycleClass::Cdrise => {
                s.ucrosscdrise += ucross(sigma, i);
                s.unestcdrise += unest(sigma, i);
                s.ucrosscdrise_prime += ucross_p(sigma, i);
                s.unestcdrise_prime += unest_p(sigma, i);
            }
            CycleClass::Cpeak => {
                s.lcrosscpeak += lcross(sigma, i);
                s.lnestcpeak += lnest(sigma, i);
                s.ucrosscpeak_prime += ucross_p(sigma, i);
                s.unestcpeak_prime += unest_p(sigma, i);
                if cycle_max[i] {
                    s.maxpeak += 1;
                } else {
                    s.nmaxpeak += 1;
                }
            }
            CycleClass::Cdfall => {
                s.lcrosscdfall += lcross(sigma, i);
                s.lnestcdfall += lnest(sigma, i);
                s.lcrosscdfall_prime += lcross_p(sigma, i);
                s.lnestcdfall_prime += lnest_p(sigma, i);
            }
            CycleClass::Fix => {}
        }
        if cc == CycleClass::Cval {
            s.lcrosscval_prime += lcross_p(sigma, i);
            s.lnestcval_prime += lnest_p(sigma, i);
        }
    }
    s
}

/// The Randrianarivony–Zeng statistics for D-o-semiderangements, computed
/// through the record/cycle dictionary: `lema = ereccpeak'`,
/// `romi = eareccval'`, `remi = eareccdfall'`, `comi = minval`,
/// `cemi = evennrfix`.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub struct RzStats {
    pub lema: usize,
    pub romi: usize,
    pub remi: usize,
    pub fix: usize,
    pub comi: usize,
    pub cemi: usize,
}

pub fn rz_stats(sigma: &Permutation) -> Result<RzStats, PermError> {
    if !sigma.is_dpermutation()? {
        return Err(PermError::NotInClass("D-o-semiderangement"));
    }
    if (1..=sigma.n()).any(|i| i % 2 == 1 && sigma.is_fixed_point(i)) {
        return Err(PermError::NotInClass("D-o-semiderangement"));
    }
    let s = stat_vector(sigma);
    Ok(RzStats {
        lema: s.ereccpeak_prime,
        romi: s.eareccval_prime,
        remi: s.eareccdfall_prime,
        fix: s.fix,
        comi: s.minval,
        cemi: s.evennrfix,
    })
}
