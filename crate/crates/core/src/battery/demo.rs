//! The worked example on `mod-es`, the injective hull of the simple module
//! over `F_2<1,a,b>` with `a^2 = ab = ba = b^2 = 0`.
//!
//! The module may arrive in any basis: an isomorphism to the catalog copy is
//! found first and the named submodules `S, K, L, N` are pulled back along it.

use serde::Serialize;

use crate::algmod::catalog::mod_es;
use crate::algmod::{quotient, ModulePresentation, Submodule};
use crate::error::{Error, Result};
use crate::fplin::Subspace;
use crate::homlab::{exists_mono, MonoSearch};
use crate::latt::cover_relation;
use crate::preds::Analysis;
use crate::Budget;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DemoClaim {
    pub claim: String,
    pub holds: bool,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DemoReport {
    pub module: String,
    pub claims: Vec<DemoClaim>,
}

impl DemoReport {
    pub fn all_hold(&self) -> bool {
        self.claims.iter().all(|c| c.holds)
    }
}

fn not_es() -> Error {
    Error::DemoFixtureSpecific {
        expected: "mod-es".into(),
    }
}

fn rows(s: &Subspace) -> String {
    s.to_string()
}

struct Claims(Vec<DemoClaim>);

impl Claims {
    fn push(&mut self, claim: &str, holds: bool, detail: impl Into<String>) {
        self.0.push(DemoClaim {
            claim: claim.into(),
            holds,
            detail: detail.into(),
        });
    }
}

/// Recomputes every claim about `mod-es` on `m`, which must be isomorphic to it.
pub fn demo_remark(m: &ModulePresentation) -> Result<DemoReport> {
    let es = mod_es();
    if m.dim() != es.dim() || m.same_algebra(&es).is_err() {
        return Err(not_es());
    }
    let f = match exists_mono(m, &es, Budget::default().scan_limit)? {
        MonoSearch::Yes(f) => f,
        _ => return Err(not_es()),
    };
    let back = f.inverse().expect("injective map between equal dimensions");
    let pull = |rows: &[[u8; 3]]| -> Result<Submodule> {
        let s = es.submodule_from_rows(rows)?;
        m.submodule(s.image_under(&back))
    };
    let s = pull(&[[1, 0, 0]])?;
    let k = pull(&[[1, 0, 0], [0, 1, 0]])?;
    let l = pull(&[[1, 0, 0], [0, 0, 1]])?;
    let n = pull(&[[1, 0, 0], [0, 1, 1]])?;
    let zero = m.zero_submodule();
    let whole = m.whole();

    let an = Analysis::new(m, Budget::default());
    let mut c = Claims(Vec::new());

    let lattice = an.lattice()?.elements();
    let named = [&zero, &s, &k, &l, &n, &whole];
    let expected_covers: Vec<(usize, usize)> =
        vec![(0, 1), (1, 2), (1, 3), (1, 4), (2, 5), (3, 5), (4, 5)];
    let named_elems: Vec<Submodule> = named.iter().map(|x| (*x).clone()).collect();
    let same_set = lattice.len() == 6 && named.iter().all(|x| lattice.contains(x));
    let covers_ok = same_set && cover_relation(&named_elems) == expected_covers;
    c.push(
        "the lattice is 0 < S < K, L, N < M",
        covers_ok,
        format!(
            "{} submodules, covers 0-S, S-K, S-L, S-N, K-M, L-M, N-M",
            lattice.len()
        ),
    );

    let kl = an.product(&k, &l);
    c.push("K_M L = S", kl == s, rows(&kl));
    let kk = an.product(&k, &k);
    c.push("K_M K = S", kk == s, rows(&kk));
    let ss = an.product(&s, &s);
    c.push("S_M S = 0", ss.is_zero(), rows(&ss));

    let anns: Vec<Submodule> = [&k, &l, &n, &s].iter().map(|x| an.annihilator(x)).collect();
    c.push(
        "Ann_M(K) = Ann_M(L) = Ann_M(N) = Ann_M(S) = S",
        anns.iter().all(|a| *a == s),
        anns.iter().map(|a| rows(a)).collect::<Vec<_>>().join(", "),
    );

    let right = an.product(&l, &an.product(&k, &s));
    let left = an.product(&an.product(&l, &k), &s);
    c.push(
        "the product is not associative: L_M (K_M S) = S but (L_M K)_M S = 0",
        right == s && left.is_zero(),
        format!(
            "L_M (K_M S) = {}, (L_M K)_M S = {}",
            rows(&right),
            rows(&left)
        ),
    );

    let semiprime = an.is_semiprime()?;
    c.push(
        "M is not semiprime",
        !semiprime.holds(),
        semiprime
            .witness()
            .map_or_else(String::new, |w| w.note.clone()),
    );
    let retractable = an.is_retractable()?;
    c.push(
        "M is retractable",
        retractable.holds(),
        "every nonzero submodule receives a nonzero map from M",
    );
    let sp = an.is_self_projective()?;
    c.push(
        "M is not self-projective",
        !sp.holds(),
        sp.witness().map_or_else(String::new, |w| w.note.clone()),
    );
    let duo = an.is_duo()?;
    c.push(
        "M is duo",
        duo.holds(),
        "every submodule is fully invariant",
    );

    let (q, _) = quotient(m, &s)?;
    let q_duo = Analysis::new(&q, Budget::default()).is_duo()?;
    c.push(
        "M/S is not duo",
        !q_duo.holds(),
        q_duo.witness().map_or_else(String::new, |w| w.note.clone()),
    );

    Ok(DemoReport {
        module: m.name().to_string(),
        claims: c.0,
    })
}
