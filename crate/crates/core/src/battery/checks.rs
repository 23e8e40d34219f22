//! The registered checks. Each conclusion procedure assumes its hypotheses
//! were verified by the caller and recomputes everything else.

use std::collections::BTreeSet;

use super::{
    Ctx, Entry, Hypothesis as H, Outcome, CHECK_ORACLE_LIMIT, CHECK_SCAN_LIMIT, UNIVERSE_CAP,
};
use crate::algmod::{carve, quotient, ModulePresentation, Submodule};
use crate::endoring::{endo_radical, endo_verdict, quotient_verdict, IDEAL_SCAN_LIMIT};
use crate::error::Result;
use crate::fplin::{all_vectors, nullspace, Matrix, Subspace};
use crate::homlab::{enumerate, hom_space, HomBasis};
use crate::latt::{cyclic, fi_pseudocomplements, DEFAULT_LATTICE_CAP};
use crate::preds::{classical_singular, make_singular_quotient, Analysis, Witness};

pub(crate) const REGISTRY: &[Entry] = &[
    Entry {
        id: "B1",
        statement: "for fully invariant P: P is prime iff K, L containing P with K_M L <= P forces K = P or L = P",
        hypotheses: &[H::SelfProjective],
        run: b1,
    },
    Entry {
        id: "B2",
        statement: "for fully invariant N: semiprime over fully invariant K, over all K, and over K containing N agree",
        hypotheses: &[H::SelfProjective],
        run: b2,
    },
    Entry {
        id: "B3",
        statement: "N semiprime and J fully invariant with J^n <= N imply J <= N",
        hypotheses: &[H::SelfProjective],
        run: b3,
    },
    Entry {
        id: "B4",
        statement: "Hom_R(M, N) a prime (semiprime) ideal of End_R(M) implies N prime (semiprime)",
        hypotheses: &[H::GeneratesSubmodules],
        run: b4,
    },
    Entry {
        id: "B5",
        statement: "for proper fully invariant N: semiprime, the elementwise test and being an intersection of primes agree",
        hypotheses: &[H::SelfProjective],
        run: b5,
    },
    Entry {
        id: "B6",
        statement: "the minimal prime submodules exist and meet in 0",
        hypotheses: &[H::SelfProjective, H::Semiprime],
        run: b6,
    },
    Entry {
        id: "B7",
        statement: "L_M N = 0 implies N_M L = 0 and L meet N = 0",
        hypotheses: &[H::SelfProjective, H::Semiprime],
        run: b7,
    },
    Entry {
        id: "B8",
        statement: "N is an annihilator submodule iff N = Ann_M(Ann_M(N))",
        hypotheses: &[H::SelfProjective, H::Semiprime],
        run: b8,
    },
    Entry {
        id: "B9",
        statement: "Ann_M(N) is the unique fully invariant pseudocomplement of N, and N + Ann_M(N) meets every nonzero fully invariant submodule",
        hypotheses: &[H::Semiprime],
        run: b9,
    },
    Entry {
        id: "B10",
        statement: "Ann_M(N) is the intersection of the minimal primes not containing N",
        hypotheses: &[H::Semiprime],
        run: b10,
    },
    Entry {
        id: "B11",
        statement: "semiprime implies retractable",
        hypotheses: &[H::SelfProjective],
        run: b11,
    },
    Entry {
        id: "B12",
        statement: "maximal annihilator, minimal prime annihilator and prime annihilator agree; Ann_M(U) is a maximal annihilator for uniform U",
        hypotheses: &[H::SelfProjective, H::Semiprime],
        run: b12,
    },
    Entry {
        id: "B13",
        statement: "the minimal primes are the Ann_M(U_i) over an independent family of uniforms, at most Udim(M) of them",
        hypotheses: &[H::SelfProjective, H::Semiprime],
        run: b13,
    },
    Entry {
        id: "B14",
        statement: "semisimple iff semiprime (finite length)",
        hypotheses: &[H::Retractable],
        run: b14,
    },
    Entry {
        id: "B15",
        statement: "a minimal submodule N has N_M N = 0 or is a direct summand; always a summand when M is retractable and semiprime",
        hypotheses: &[],
        run: b15,
    },
    Entry {
        id: "B16",
        statement: "N essentially compressible implies Ann_M(N) semiprime, for N among submodules and quotients of M",
        hypotheses: &[H::SelfProjective],
        run: b16,
    },
    Entry {
        id: "B17",
        statement: "for N = M/K with K essential, every f: M -> N has essential kernel",
        hypotheses: &[H::SelfProjective],
        run: b17,
    },
    Entry {
        id: "B18",
        statement: "essentially compressible implies non M-singular",
        hypotheses: &[H::SelfProjective],
        run: b18,
    },
    Entry {
        id: "B19",
        statement: "every injective endomorphism has essential image",
        hypotheses: &[],
        run: b19,
    },
    Entry {
        id: "B20",
        statement: "semiprime and non M-singular, semiprime with ACC on annihilators, and (essential iff receives a monomorphism from M) agree",
        hypotheses: &[H::SelfProjective],
        run: b20,
    },
    Entry {
        id: "B21",
        statement: "finite uniform dimension with enough monoforms iff Goldie",
        hypotheses: &[H::SelfProjective, H::Semiprime],
        run: b21,
    },
    Entry {
        id: "B22",
        statement: "Z(N) is the sum of f(M) over f: M -> N with essential kernel (containment without the progenerator flag)",
        hypotheses: &[],
        run: b22,
    },
    Entry {
        id: "B23",
        statement: "Z(N) is the sum of f(M) over f with f alpha = 0 for some monomorphism alpha with essential image",
        hypotheses: &[H::Semiprime, H::Progenerator],
        run: b23,
    },
    Entry {
        id: "B24",
        statement: "semiprime Goldie iff weakly compressible and non M-singular; iff End_R(M) semiprime when retractable",
        hypotheses: &[H::SelfProjective],
        run: b24,
    },
    Entry {
        id: "B25",
        statement: "prime Goldie iff (K_M N != 0 for nonzero K, N) and non M-singular; iff End_R(M) prime when retractable",
        hypotheses: &[H::SelfProjective],
        run: b25,
    },
    Entry {
        id: "B26",
        statement: "M is Goldie iff every M/P over the minimal primes P is Goldie",
        hypotheses: &[H::SelfProjective, H::Semiprime],
        run: b26,
    },
    Entry {
        id: "B27",
        statement: "regular submodules are exactly the essential ones; Reg(M)-injective implies M-injective",
        hypotheses: &[H::SelfProjective, H::Semiprime],
        run: b27,
    },
    Entry {
        id: "B28",
        statement: "duo and generating its submodules iff every submodule is I M for a two-sided ideal I of End_R(M)",
        hypotheses: &[],
        run: b28,
    },
    Entry {
        id: "B29",
        statement: "every left annihilator A satisfies Ann_M(Ann_M(A)) = A",
        hypotheses: &[H::SelfProjective, H::Duo, H::Semiprime, H::NonMSingular],
        run: b29,
    },
    Entry {
        id: "B30",
        statement: "finite Udim, finitely many minimal primes, finitely many annihilators, ACC on annihilators and on pseudocomplements agree",
        hypotheses: &[H::SelfProjective, H::Duo, H::Semiprime, H::NonMSingular],
        run: b30,
    },
    Entry {
        id: "B31",
        statement: "a prime duo module has Udim(M) = 1",
        hypotheses: &[H::SelfProjective, H::Prime, H::Duo],
        run: b31,
    },
    Entry {
        id: "B32",
        statement: "for a semiprime duo module: prime Goldie iff uniform and non M-singular",
        hypotheses: &[H::SelfProjective, H::Duo, H::Semiprime],
        run: b32,
    },
];

fn pass(detail: impl Into<String>) -> Result<Outcome> {
    Ok(Outcome::Pass(detail.into()))
}

fn fail(w: Witness) -> Result<Outcome> {
    Ok(Outcome::Fail(w))
}

fn rows(s: &Subspace) -> String {
    s.to_string()
}

fn meet_all<'s>(
    m: &ModulePresentation,
    subs: impl IntoIterator<Item = &'s Submodule>,
) -> Submodule {
    subs.into_iter().fold(m.whole(), |acc, s| acc.meet(s))
}

fn proper_fi(an: &Analysis<'_>) -> Result<Vec<Submodule>> {
    Ok(an
        .fi_lattice()?
        .iter()
        .filter(|s| !s.is_full())
        .cloned()
        .collect())
}

/// Minimal elements among the lattice elements strictly above `p`.
fn minimal_above<'l>(lattice: &'l [Submodule], p: &Submodule) -> Vec<&'l Submodule> {
    let above: Vec<&Submodule> = lattice.iter().filter(|k| *k != p && p.leq(k)).collect();
    above
        .iter()
        .filter(|k| !above.iter().any(|j| j != *k && j.leq(k)))
        .copied()
        .collect()
}

/// The distinct nonzero cyclic submodules.
fn cyclic_submodules(m: &ModulePresentation) -> Vec<Submodule> {
    let set: BTreeSet<Submodule> = all_vectors(m.prime(), m.dim())
        .filter(|v| v.iter().any(|&x| x != 0))
        .map(|v| cyclic(m, &v))
        .collect();
    set.into_iter().collect()
}

/// `Ann_M(K)` over `K`, deduplicated; `Ann_M(0) = M` only with `include_zero`.
fn annihilator_submodules(an: &Analysis<'_>, include_zero: bool) -> Result<Vec<Submodule>> {
    let set: BTreeSet<Submodule> = an
        .lattice()?
        .iter()
        .filter(|k| include_zero || !k.is_zero())
        .map(|k| an.annihilator(k))
        .collect();
    Ok(set.into_iter().collect())
}

fn maximal_elements(subs: &[Submodule]) -> Vec<Submodule> {
    subs.iter()
        .filter(|s| !subs.iter().any(|t| t != *s && s.leq(t)))
        .cloned()
        .collect()
}

/// `M`, then nonzero proper submodules and the matching quotients, in
/// canonical lattice order, at most [`UNIVERSE_CAP`] modules.
fn universe(an: &Analysis<'_>) -> Result<Vec<ModulePresentation>> {
    let m = an.module();
    let mut out = vec![m.clone()];
    for k in an
        .lattice()?
        .iter()
        .filter(|k| !k.is_zero() && !k.is_full())
    {
        if out.len() >= UNIVERSE_CAP {
            break;
        }
        out.push(
            carve(m, k)?
                .0
                .renamed(format!("{} sub {}", m.name(), rows(k))),
        );
        out.push(
            quotient(m, k)?
                .0
                .renamed(format!("{} mod {}", m.name(), rows(k))),
        );
    }
    out.truncate(UNIVERSE_CAP);
    Ok(out)
}

fn b1(c: &Ctx<'_, '_>) -> Result<Outcome> {
    let an = c.an;
    let lattice = an.lattice()?.elements();
    let fi = proper_fi(an)?;
    for p in &fi {
        let by_fi = an.is_prime_submodule(p)?;
        let ups = minimal_above(lattice, p);
        let restricted = ups
            .iter()
            .flat_map(|k| ups.iter().map(move |l| (*k, *l)))
            .find(|(k, l)| an.product(k, l).leq(p));
        if by_fi.holds() != restricted.is_none() {
            let mut w = Witness::new(format!(
                "fully invariant pairs say prime = {}, pairs above P say prime = {}",
                by_fi.holds(),
                restricted.is_none()
            ))
            .sub("P", p);
            if let Some((k, l)) = restricted {
                w = w.sub("K", k).sub("L", l);
            }
            if let Some(fw) = by_fi.witness() {
                w.submodules.extend(fw.submodules.iter().cloned());
            }
            return fail(w);
        }
    }
    pass(format!("{} proper fully invariant submodules", fi.len()))
}

fn b2(c: &Ctx<'_, '_>) -> Result<Outcome> {
    let an = c.an;
    let lattice = an.lattice()?;
    let fi = proper_fi(an)?;
    for n in &fi {
        let over_fi = an.is_semiprime_submodule(n)?.definition.holds();
        let over_all = lattice
            .iter()
            .find(|k| !k.leq(n) && an.product(k, k).leq(n));
        let over_above = lattice
            .iter()
            .find(|k| *k != n && n.leq(k) && an.product(k, k).leq(n));
        if over_fi != over_all.is_none() || over_fi != over_above.is_none() {
            let mut w = Witness::new(format!(
                "semiprime over fully invariant K = {over_fi}, over all K = {}, over K above N = {}",
                over_all.is_none(),
                over_above.is_none()
            ))
            .sub("N", n);
            for (name, k) in [("K (all)", over_all), ("K (above)", over_above)] {
                if let Some(k) = k {
                    w = w.sub(name, k);
                }
            }
            return fail(w);
        }
    }
    pass(format!("{} proper fully invariant submodules", fi.len()))
}

/// The eventual value of the decreasing sequence `J, J^2, J^3, ...`.
fn stable_power(an: &Analysis<'_>, j: &Submodule) -> Submodule {
    let mut cur = j.clone();
    loop {
        let next = an.product(j, &cur);
        if next == cur {
            return cur;
        }
        cur = next;
    }
}

fn b3(c: &Ctx<'_, '_>) -> Result<Outcome> {
    let an = c.an;
    let fi = an.fi_lattice()?;
    let mut semiprimes = 0;
    for n in proper_fi(an)? {
        if !an.is_semiprime_submodule(&n)?.definition.holds() {
            continue;
        }
        semiprimes += 1;
        for j in fi {
            let low = stable_power(an, j);
            if low.leq(&n) && !j.leq(&n) {
                return fail(
                    Witness::new("some power J^n lies in the semiprime N but J does not")
                        .sub("N", &n)
                        .sub("J", j)
                        .sub("J^n", &low),
                );
            }
        }
    }
    pass(format!(
        "{semiprimes} semiprime submodules against {} fully invariant J",
        fi.len()
    ))
}

fn b4(c: &Ctx<'_, '_>) -> Result<Outcome> {
    let an = c.an;
    let endo = an.endo();
    let radical = endo_radical(endo);
    let mut checked = 0;
    for n in proper_fi(an)? {
        let coords: Vec<Vec<u8>> = an
            .hom_into(&n)
            .mats()
            .iter()
            .map(|f| {
                endo.rep
                    .coordinates(f)
                    .expect("a map into N is an endomorphism")
            })
            .collect();
        let ideal = Subspace::span(endo.algebra.prime(), endo.algebra.dim(), &coords);
        let v = quotient_verdict(&endo.algebra, &radical, &ideal, CHECK_ORACLE_LIMIT)?;
        if !v.oracles_agree() {
            return fail(
                Witness::new("ring verdict on End_R(M)/Hom_R(M, N) disagrees with its oracle")
                    .sub("N", &n),
            );
        }
        if v.prime && !an.is_prime_submodule(&n)?.holds() {
            return fail(
                Witness::new("Hom_R(M, N) is a prime ideal but N is not prime").sub("N", &n),
            );
        }
        if v.semiprime && !an.is_semiprime_submodule(&n)?.definition.holds() {
            return fail(
                Witness::new("Hom_R(M, N) is a semiprime ideal but N is not semiprime")
                    .sub("N", &n),
            );
        }
        checked += 1;
    }
    pass(format!("{checked} proper fully invariant submodules"))
}

fn b5(c: &Ctx<'_, '_>) -> Result<Outcome> {
    let an = c.an;
    let m = an.module();
    let primes = an.prime_submodules()?;
    let fi = proper_fi(an)?;
    for n in &fi {
        let t = an.is_semiprime_submodule(n)?;
        let meet = meet_all(m, primes.iter().filter(|p| n.leq(p)));
        let by_primes = meet == *n;
        let (def, elem) = (t.definition.holds(), t.element.holds());
        if def != elem || def != by_primes {
            return fail(
                Witness::new(format!("definition = {def}, elementwise = {elem}, intersection of primes = {by_primes}"))
                    .sub("N", n)
                    .sub("meet of primes above N", &meet),
            );
        }
    }
    pass(format!(
        "{} proper fully invariant submodules, {} primes",
        fi.len(),
        primes.len()
    ))
}

fn b6(c: &Ctx<'_, '_>) -> Result<Outcome> {
    let an = c.an;
    let mp = an.minimal_primes()?;
    let meet = meet_all(an.module(), &mp);
    if mp.is_empty() || !meet.is_zero() {
        let mut w = Witness::new("minimal primes missing or meeting in a nonzero submodule")
            .sub("meet", &meet);
        for p in &mp {
            w = w.sub("P", p);
        }
        return fail(w);
    }
    let list: Vec<String> = mp.iter().map(|p| rows(p)).collect();
    pass(format!("minimal primes {{{}}} meet in 0", list.join(", ")))
}

/// A counterexample `(L, N)` has one with `N` cyclic: shrink `N` to `Rn`
/// for an `n` moved by a map `M -> L`, or lying in `L meet N`.
fn b7(c: &Ctx<'_, '_>) -> Result<Outcome> {
    let an = c.an;
    let cyclics = cyclic_submodules(an.module());
    let lattice = an.lattice()?;
    for l in lattice {
        for n in &cyclics {
            if !an.product(l, n).is_zero() {
                continue;
            }
            let back = an.product(n, l);
            if !back.is_zero() || !l.meet(n).is_zero() {
                return fail(
                    Witness::new("L_M N = 0 but N_M L != 0 or L meet N != 0")
                        .sub("L", l)
                        .sub("N", n)
                        .sub("N_M L", &back),
                );
            }
        }
    }
    pass(format!(
        "{} submodules L against {} cyclic N",
        lattice.len(),
        cyclics.len()
    ))
}

fn b8(c: &Ctx<'_, '_>) -> Result<Outcome> {
    let an = c.an;
    let anns = annihilator_submodules(an, true)?;
    let lattice = an.lattice()?;
    for n in lattice {
        let double = an.annihilator(&an.annihilator(n));
        let is_ann = anns.contains(n);
        if is_ann != (double == *n) {
            return fail(
                Witness::new(format!(
                    "annihilator submodule = {is_ann}, double annihilator equal = {}",
                    double == *n
                ))
                .sub("N", n)
                .sub("Ann(Ann(N))", &double),
            );
        }
    }
    pass(format!(
        "{} annihilator submodules among {}",
        anns.len(),
        lattice.len()
    ))
}

fn b9(c: &Ctx<'_, '_>) -> Result<Outcome> {
    let an = c.an;
    let fi = an.fi_lattice()?;
    let lattice = an.lattice()?;
    for n in lattice {
        let ann = an.annihilator(n);
        let pcs = fi_pseudocomplements(fi, n);
        if pcs != [ann.clone()] {
            let mut w = Witness::new("fully invariant pseudocomplements differ from {Ann_M(N)}")
                .sub("N", n)
                .sub("Ann(N)", &ann);
            for p in &pcs {
                w = w.sub("pseudocomplement", p);
            }
            return fail(w);
        }
        let sum = n.join(&ann);
        if let Some(l) = fi.iter().find(|l| !l.is_zero() && sum.meet(l).is_zero()) {
            return fail(
                Witness::new("N + Ann_M(N) misses a fully invariant submodule")
                    .sub("N", n)
                    .sub("L", l),
            );
        }
    }
    pass(format!("{} submodules", lattice.len()))
}

fn b10(c: &Ctx<'_, '_>) -> Result<Outcome> {
    let an = c.an;
    let m = an.module();
    let mp = an.minimal_primes()?;
    let lattice = an.lattice()?;
    for n in lattice {
        let meet = meet_all(m, mp.iter().filter(|p| !n.leq(p)));
        let ann = an.annihilator(n);
        if meet != ann {
            return fail(
                Witness::new(
                    "Ann_M(N) differs from the meet of the minimal primes not containing N",
                )
                .sub("N", n)
                .sub("Ann(N)", &ann)
                .sub("meet", &meet),
            );
        }
    }
    pass(format!(
        "{} submodules, {} minimal primes",
        lattice.len(),
        mp.len()
    ))
}

fn b11(c: &Ctx<'_, '_>) -> Result<Outcome> {
    let semiprime = c.an.is_semiprime()?.holds();
    if semiprime {
        if let Some(w) = c.an.is_retractable()?.witness() {
            return fail(Witness {
                note: format!("semiprime but not retractable: {}", w.note),
                ..w.clone()
            });
        }
    }
    pass(if semiprime {
        "semiprime and retractable"
    } else {
        "not semiprime"
    })
}

fn b12(c: &Ctx<'_, '_>) -> Result<Outcome> {
    let an = c.an;
    let anns = annihilator_submodules(an, false)?;
    let maximal = maximal_elements(&anns);
    let mp = an.minimal_primes()?;
    let primes = an.prime_submodules()?;
    for n in &anns {
        let c1 = maximal.contains(n);
        let c2 = mp.contains(n);
        let c3 = primes.contains(n);
        if c1 != c2 || c1 != c3 {
            return fail(
                Witness::new(format!(
                    "annihilator N: maximal = {c1}, minimal prime = {c2}, prime = {c3}"
                ))
                .sub("N", n),
            );
        }
    }
    let mut uniforms = 0;
    for u in an.lattice()? {
        if !an.is_uniform(u)? {
            continue;
        }
        uniforms += 1;
        let ann = an.annihilator(u);
        if !maximal.contains(&ann) {
            return fail(
                Witness::new("Ann_M(U) for uniform U is not a maximal annihilator")
                    .sub("U", u)
                    .sub("Ann(U)", &ann),
            );
        }
    }
    pass(format!(
        "{} annihilators ({} maximal), {uniforms} uniform submodules",
        anns.len(),
        maximal.len()
    ))
}

/// A maximal independent family of minimal submodules, built greedily.
fn independent_atoms(an: &Analysis<'_>) -> Result<Vec<Submodule>> {
    let mut sum = an.module().zero_submodule();
    let mut family = Vec::new();
    for t in an.minimal_submodules()? {
        if sum.meet(&t).is_zero() {
            sum = sum.join(&t);
            family.push(t);
        }
    }
    Ok(family)
}

fn b13(c: &Ctx<'_, '_>) -> Result<Outcome> {
    let an = c.an;
    let mp = an.minimal_primes()?;
    let udim = an.udim()?;
    let family = independent_atoms(an)?;
    let anns: BTreeSet<Submodule> = family.iter().map(|u| an.annihilator(u)).collect();
    if let Some((u, a)) = family
        .iter()
        .map(|u| (u, an.annihilator(u)))
        .find(|(_, a)| !mp.contains(a))
    {
        return fail(
            Witness::new("Ann_M(U_i) is not a minimal prime")
                .sub("U", u)
                .sub("Ann(U)", &a),
        );
    }
    if let Some(p) = mp.iter().find(|p| !anns.contains(*p)) {
        return fail(Witness::new("a minimal prime is not of the form Ann_M(U_i)").sub("P", p));
    }
    if mp.len() > udim {
        return fail(Witness::new(format!(
            "{} minimal primes exceed Udim(M) = {udim}",
            mp.len()
        )));
    }
    pass(format!("{} minimal primes, Udim(M) = {udim}", mp.len()))
}

fn b14(c: &Ctx<'_, '_>) -> Result<Outcome> {
    let semisimple = c.an.is_semisimple()?;
    let semiprime = c.an.is_semiprime()?;
    if semisimple.holds() != semiprime.holds() {
        let mut w = Witness::new(format!(
            "semisimple = {}, semiprime = {}",
            semisimple.holds(),
            semiprime.holds()
        ));
        for h in [&semisimple, &semiprime] {
            if let Some(x) = h.witness() {
                w.submodules.extend(x.submodules.iter().cloned());
            }
        }
        return fail(w);
    }
    pass(format!("both {}", semiprime.holds()))
}

fn complement_of<'l>(lattice: &'l [Submodule], n: &Submodule) -> Option<&'l Submodule> {
    lattice
        .iter()
        .find(|k| k.meet(n).is_zero() && k.join(n).is_full())
}

fn b15(c: &Ctx<'_, '_>) -> Result<Outcome> {
    let an = c.an;
    let lattice = an.lattice()?.elements();
    let minimals = an.minimal_submodules()?;
    let mut summands = 0;
    for t in &minimals {
        let complement = complement_of(lattice, t);
        summands += usize::from(complement.is_some());
        if !an.product(t, t).is_zero() && complement.is_none() {
            return fail(Witness::new("minimal N with N_M N != 0 and no complement").sub("N", t));
        }
    }
    if minimals.len() != summands && an.is_retractable()?.holds() && an.is_semiprime()?.holds() {
        let t = minimals
            .iter()
            .find(|t| complement_of(lattice, t).is_none())
            .expect("some minimal is not a summand");
        return fail(
            Witness::new(
                "retractable semiprime module with a minimal submodule that is not a summand",
            )
            .sub("N", t),
        );
    }
    pass(format!(
        "{} minimal submodules, {summands} direct summands",
        minimals.len()
    ))
}

fn b16(c: &Ctx<'_, '_>) -> Result<Outcome> {
    let an = c.an;
    let m = an.module();
    let mut compressible = 0;
    let uni = universe(an)?;
    for n in &uni {
        if !Analysis::new(n, an.budget())
            .is_essentially_compressible()?
            .holds()
        {
            continue;
        }
        compressible += 1;
        let ann = Submodule::trusted(hom_space(m, n)?.common_kernel());
        if ann.is_full() {
            continue;
        }
        if let Some(w) = an.is_semiprime_submodule(&ann)?.definition.witness() {
            return fail(Witness {
                note: format!(
                    "N = {} is essentially compressible but Ann_M(N) is not semiprime: {}",
                    n.name(),
                    w.note
                ),
                ..w.clone()
            });
        }
    }
    pass(format!(
        "{compressible} essentially compressible modules among {}",
        uni.len()
    ))
}

fn b17(c: &Ctx<'_, '_>) -> Result<Outcome> {
    let an = c.an;
    let m = an.module();
    let socle = an.socle()?;
    let mut quotients = 0;
    for k in an
        .essential_submodules()?
        .iter()
        .filter(|k| !k.is_full())
        .take(UNIVERSE_CAP)
    {
        let q = make_singular_quotient(m, k)?;
        quotients += 1;
        if let Some(f) = hom_space(m, &q)?
            .mats()
            .iter()
            .find(|f| !socle.image_under(f).is_zero())
        {
            return fail(
                Witness::new("f: M -> M/K whose kernel misses part of the socle")
                    .sub("K", k)
                    .map("f", f),
            );
        }
    }
    pass(format!("{quotients} singular quotients"))
}

fn b18(c: &Ctx<'_, '_>) -> Result<Outcome> {
    let ec = c.an.is_essentially_compressible()?.holds();
    if ec {
        if let Some(w) = c.an.is_non_m_singular()?.witness() {
            return fail(Witness {
                note: format!("essentially compressible but {}", w.note),
                ..w.clone()
            });
        }
    }
    pass(if ec {
        "essentially compressible and non M-singular"
    } else {
        "not essentially compressible"
    })
}

fn b19(c: &Ctx<'_, '_>) -> Result<Outcome> {
    let an = c.an;
    let m = an.module();
    let limit = an.budget().scan_limit.min(CHECK_SCAN_LIMIT);
    let mut monos = 0;
    for f in enumerate(an.end(), limit)? {
        if f.rank() < m.dim() {
            continue;
        }
        monos += 1;
        let image = Submodule::trusted(Subspace::row_space(&f.transpose()));
        if !an.is_essential(&image)? {
            return fail(
                Witness::new("injective endomorphism with non-essential image").map("f", &f),
            );
        }
    }
    pass(format!("{monos} injective endomorphisms"))
}

fn regular_vs_essential(an: &Analysis<'_>) -> Result<Option<Witness>> {
    let regular = an.regular_submodules()?;
    let essential = an.essential_submodules()?;
    if regular == essential {
        return Ok(None);
    }
    let odd = an
        .lattice()?
        .iter()
        .find(|n| regular.contains(n) != essential.contains(n))
        .expect("the sets differ");
    Ok(Some(
        Witness::new(format!(
            "regular = {}, essential = {}",
            regular.contains(odd),
            essential.contains(odd)
        ))
        .sub("N", odd),
    ))
}

fn b20(c: &Ctx<'_, '_>) -> Result<Outcome> {
    let an = c.an;
    let semiprime = an.is_semiprime()?.holds();
    let c1 = semiprime && an.is_non_m_singular()?.holds();
    let c2 = semiprime && an.left_annihilators()?.acc_holds();
    let mismatch = regular_vs_essential(an)?;
    let c3 = mismatch.is_none();
    if c1 != c2 || c1 != c3 {
        let note = format!("(1) = {c1}, (2) = {c2}, (3) = {c3}");
        return fail(match mismatch {
            Some(w) => Witness {
                note: format!("{note}; {}", w.note),
                ..w
            },
            None => Witness::new(note),
        });
    }
    pass(format!("all three {c1}"))
}

fn b21(c: &Ctx<'_, '_>) -> Result<Outcome> {
    let an = c.an;
    let goldie = an.goldie_report()?.goldie;
    let monoforms = an.has_enough_monoforms()?;
    let lhs = monoforms.holds();
    if lhs != goldie {
        let w = monoforms.witness().cloned().unwrap_or_default();
        return fail(Witness {
            note: format!("enough monoforms = {lhs}, Goldie = {goldie}; {}", w.note),
            ..w
        });
    }
    pass(format!("both {goldie}"))
}

fn b22(c: &Ctx<'_, '_>) -> Result<Outcome> {
    let an = c.an;
    let uni = universe(an)?;
    for n in &uni {
        let lower = an.singular_lower(n)?;
        let z = classical_singular(n);
        let ok = if c.meta.progenerator {
            lower == z
        } else {
            lower.is_subspace_of(&z)
        };
        if !ok {
            return fail(
                Witness::new(format!(
                    "N = {}: sum over maps with essential kernel vs Z(N)",
                    n.name()
                ))
                .sub("sum f(M)", &lower)
                .sub("Z(N)", &z),
            );
        }
    }
    let mode = if c.meta.progenerator {
        "equality"
    } else {
        "containment"
    };
    pass(format!("{mode} on {} modules", uni.len()))
}

/// `sum f(M)` over `f` in `hom` with `f alpha = 0`.
fn images_killing(hom: &HomBasis, alpha: &Matrix) -> Subspace {
    let p = hom.prime();
    let composed: Vec<Matrix> = hom.mats().iter().map(|f| f.mul(alpha)).collect();
    let entries = hom.target_dim() * hom.source_dim();
    let system = Matrix::from_fn(p, entries, composed.len(), |r, col| {
        composed[col].as_flat()[r]
    });
    let solutions = nullspace(&system);
    let mut cols = Vec::new();
    for coeffs in solutions.basis_vectors() {
        let f = hom.element(coeffs);
        cols.extend((0..f.cols()).map(|j| f.column(j)));
    }
    Subspace::span(p, hom.target_dim(), &cols)
}

fn b23(c: &Ctx<'_, '_>) -> Result<Outcome> {
    let an = c.an;
    let m = an.module();
    let limit = an.budget().scan_limit.min(CHECK_SCAN_LIMIT);
    let mut alphas = Vec::new();
    for f in enumerate(an.end(), limit)? {
        if f.rank() == m.dim()
            && an.is_essential(&Submodule::trusted(Subspace::row_space(&f.transpose())))?
        {
            alphas.push(f);
        }
    }
    let uni = universe(an)?;
    for n in &uni {
        let hom = hom_space(m, n)?;
        let by_alpha = alphas
            .iter()
            .map(|a| images_killing(&hom, a))
            .fold(Subspace::zero(m.prime(), n.dim()), |acc, s| {
                acc.sum(&s).expect("same ambient")
            });
        let lower = an.singular_lower(n)?;
        let z = classical_singular(n);
        if by_alpha != lower || by_alpha != z {
            return fail(
                Witness::new(format!(
                    "N = {}: the alpha form, the essential-kernel form and Z(N) differ",
                    n.name()
                ))
                .sub("alpha form", &by_alpha)
                .sub("essential-kernel form", &lower)
                .sub("Z(N)", &z),
            );
        }
    }
    pass(format!(
        "{} modules, {} monomorphisms alpha",
        uni.len(),
        alphas.len()
    ))
}

fn b24(c: &Ctx<'_, '_>) -> Result<Outcome> {
    let an = c.an;
    let c1 = an.is_semiprime()?.holds();
    let c4 = an.is_weakly_compressible()?.holds() && an.is_non_m_singular()?.holds();
    if c1 != c4 {
        return fail(Witness::new(format!(
            "semiprime Goldie = {c1}, weakly compressible and non M-singular = {c4}"
        )));
    }
    if !an.is_retractable()?.holds() {
        return pass(format!(
            "module side {c1}; ring side skipped (not retractable)"
        ));
    }
    let v = endo_verdict(an.endo(), CHECK_ORACLE_LIMIT)?;
    if !v.oracles_agree() || v.semiprime != c1 {
        return fail(
            Witness::new(format!(
                "semiprime module = {c1}, semiprime End_R(M) = {}, oracle = {:?}",
                v.semiprime, v.semiprime_oracle
            ))
            .sub("J(End)", &v.radical),
        );
    }
    pass(format!(
        "all {c1}, End_R(M) radical dim {}",
        v.radical.dim()
    ))
}

fn b25(c: &Ctx<'_, '_>) -> Result<Outcome> {
    let an = c.an;
    let c1 = an.is_prime()?.holds();
    let minimals = an.minimal_submodules()?;
    let zero_pair = minimals
        .iter()
        .flat_map(|k| minimals.iter().map(move |n| (k, n)))
        .find(|(k, n)| an.product(k, n).is_zero());
    let c4 = zero_pair.is_none() && an.is_non_m_singular()?.holds();
    if c1 != c4 {
        let mut w = Witness::new(format!("prime Goldie = {c1}, item 4 = {c4}"));
        if let Some((k, n)) = zero_pair {
            w = w.sub("K inside every Ker f", k).sub("N", n);
        }
        return fail(w);
    }
    if !an.is_retractable()?.holds() {
        return pass(format!(
            "module side {c1}; ring side skipped (not retractable)"
        ));
    }
    let v = endo_verdict(an.endo(), CHECK_ORACLE_LIMIT)?;
    if !v.oracles_agree() || v.prime != c1 {
        return fail(Witness::new(format!(
            "prime module = {c1}, prime End_R(M) = {}, oracle = {:?}",
            v.prime, v.prime_oracle
        )));
    }
    pass(format!("all {c1}"))
}

fn b26(c: &Ctx<'_, '_>) -> Result<Outcome> {
    let an = c.an;
    let m = an.module();
    let goldie = an.goldie_report()?.goldie;
    let mp = an.minimal_primes()?;
    let mut all_goldie = true;
    for p in &mp {
        let (q, _) = quotient(m, p)?;
        let aq = Analysis::new(&q, an.budget());
        aq.udim()?;
        all_goldie &= aq.goldie_report()?.goldie;
    }
    if goldie != all_goldie {
        return fail(Witness::new(format!(
            "M Goldie = {goldie}, every M/P_i Goldie = {all_goldie}"
        )));
    }
    pass(format!("{} quotients, all {goldie}", mp.len()))
}

fn b27(c: &Ctx<'_, '_>) -> Result<Outcome> {
    let an = c.an;
    if let Some(w) = regular_vs_essential(an)? {
        return fail(w);
    }
    let uni = universe(an)?;
    let mut reg_injective = 0;
    for k in &uni {
        if !an.is_regm_injective(k)?.holds() {
            continue;
        }
        reg_injective += 1;
        if let Some(w) = an.is_m_injective(k)?.witness() {
            return fail(Witness {
                note: format!("K = {} is Reg(M)-injective but {}", k.name(), w.note),
                ..w.clone()
            });
        }
    }
    pass(format!(
        "{reg_injective} Reg(M)-injective modules among {}",
        uni.len()
    ))
}

fn b28(c: &Ctx<'_, '_>) -> Result<Outcome> {
    let an = c.an;
    let m = an.module();
    let lhs = an.is_duo()?.holds() && an.generates_its_submodules()?.holds();
    let endo = an.endo();
    let a = &endo.algebra;
    let size = a.prime().count(a.dim());
    if size.is_none_or(|s| s > IDEAL_SCAN_LIMIT) {
        return Err(crate::Error::Budget {
            size: size.map_or(u128::MAX, u128::from),
            budget: IDEAL_SCAN_LIMIT,
        });
    }
    let ideals =
        crate::endoring::two_sided_ideals(a, DEFAULT_LATTICE_CAP.min(an.budget().lattice_cap))?;
    let products: BTreeSet<Subspace> = ideals
        .iter()
        .map(|i| {
            let mut cols = Vec::new();
            for x in i.basis_vectors() {
                let f = endo.matrix_of(x);
                cols.extend((0..f.cols()).map(|j| f.column(j)));
            }
            Subspace::span(m.prime(), m.dim(), &cols)
        })
        .collect();
    let missing = an.lattice()?.iter().find(|n| !products.contains(n.space()));
    let rhs = missing.is_none();
    if lhs != rhs || an.is_multiplication_over_endo()?.holds() != rhs {
        let mut w = Witness::new(format!(
            "duo and generating = {lhs}, multiplication over End_R(M) = {rhs}"
        ));
        if let Some(n) = missing {
            w = w.sub("N not of the form I M", n);
        }
        return fail(w);
    }
    pass(format!("both {lhs}, {} two-sided ideals", ideals.len()))
}

fn b29(c: &Ctx<'_, '_>) -> Result<Outcome> {
    let an = c.an;
    let poset = an.left_annihilators()?;
    for a in &poset.all {
        let double = an.annihilator(&an.annihilator(a));
        if double != *a {
            return fail(
                Witness::new("left annihilator A with Ann_M(Ann_M(A)) != A")
                    .sub("A", a)
                    .sub("Ann(Ann(A))", &double),
            );
        }
    }
    pass(format!("{} left annihilators", poset.all.len()))
}

fn b30(c: &Ctx<'_, '_>) -> Result<Outcome> {
    let an = c.an;
    let udim = an.udim()?;
    let mp = an.minimal_primes()?;
    let anns = annihilator_submodules(an, false)?;
    let acc = an.left_annihilators()?.acc_holds();
    let lattice = an.lattice()?;
    let pseudocomplements: BTreeSet<Submodule> = lattice
        .iter()
        .map(|k| crate::latt::pseudocomplement(an.module(), k))
        .collect();
    let values = [
        udim <= an.module().dim(),
        !mp.is_empty() || an.module().is_zero(),
        !anns.is_empty(),
        acc,
        !pseudocomplements.is_empty(),
    ];
    if values.iter().any(|&v| v != values[0]) {
        return fail(Witness::new(format!(
            "finiteness conditions disagree: {values:?}"
        )));
    }
    pass(format!(
        "Udim {udim}, {} minimal primes, {} annihilators, {} pseudocomplements",
        mp.len(),
        anns.len(),
        pseudocomplements.len()
    ))
}

fn b31(c: &Ctx<'_, '_>) -> Result<Outcome> {
    let udim = c.an.udim()?;
    if udim != 1 {
        let mut w = Witness::new(format!("prime duo module with Udim(M) = {udim}"));
        for t in c.an.minimal_submodules()? {
            w = w.sub("minimal", &t);
        }
        return fail(w);
    }
    pass("Udim(M) = 1")
}

fn b32(c: &Ctx<'_, '_>) -> Result<Outcome> {
    let an = c.an;
    let c1 = an.is_prime()?.holds();
    let c3 = an.udim()? == 1 && an.is_non_m_singular()?.holds();
    if c1 != c3 {
        return fail(Witness::new(format!(
            "prime Goldie = {c1}, uniform and non M-singular = {c3}"
        )));
    }
    pass(format!("both {c1}"))
}
