use super::*;
use crate::algmod::{catalog, direct_sum, regular_module};
use crate::endoring::two_sided_ideals;
use crate::homlab::enumerate;
use std::sync::Arc;

fn an(m: &ModulePresentation) -> Analysis<'_> {
    Analysis::new(m, Budget::default())
}

fn es_alias(name: &str) -> Submodule {
    catalog::tz2_fixture().module("mod-es").unwrap().aliases[name].clone()
}

fn sub(m: &ModulePresentation, rows: &[&[u8]]) -> Submodule {
    m.submodule_from_rows(rows).unwrap()
}

fn es_mod_s() -> ModulePresentation {
    let es = catalog::mod_es();
    quotient(&es, &es_alias("S")).unwrap().0
}

/// Every element of `Hom_R(A, B)` by enumeration of its basis span.
fn all_homs(a: &ModulePresentation, b: &ModulePresentation) -> Vec<Matrix> {
    enumerate(&hom_space(a, b).unwrap(), 1 << 16).unwrap()
}

#[test]
fn prime_submodules() {
    let es = catalog::mod_es();
    let a = an(&es);
    let w = a.is_prime_submodule(&es_alias("N")).unwrap();
    assert!(!w.holds());
    let s = catalog::simple_tz2();
    assert!(an(&s)
        .is_prime_submodule(&s.zero_submodule())
        .unwrap()
        .holds());
    let a2 = catalog::mod_a2();
    assert!(an(&a2)
        .is_prime_submodule(&sub(&a2, &[&[1, 0]]))
        .unwrap()
        .holds());
    assert_eq!(
        an(&a2).is_prime_submodule(&a2.whole()),
        Err(Error::NotProper)
    );
    let q = es_mod_s();
    let line = sub(&q, &[&[1, 0]]);
    assert_eq!(
        an(&q).is_prime_submodule(&line),
        Err(Error::NotFullyInvariant)
    );
}

#[test]
fn semiprime_submodules() {
    let es = catalog::mod_es();
    let t = an(&es)
        .is_semiprime_submodule(&es.zero_submodule())
        .unwrap();
    assert!(!t.definition.holds() && !t.element.holds());
    assert_eq!(
        t.definition.witness().unwrap().submodules[1].rows,
        vec![vec![1, 0, 0]]
    );
    let a2 = catalog::mod_a2();
    let t = an(&a2)
        .is_semiprime_submodule(&a2.zero_submodule())
        .unwrap();
    assert!(t.definition.holds() && t.element.holds());
    assert_eq!(
        an(&a2).is_semiprime_submodule(&a2.whole()).map(|_| ()),
        Err(Error::NotProper)
    );
}

#[test]
fn semiprime_routes_agree_when_self_projective() {
    for fm in catalog::all_fixture_modules() {
        let m = &fm.module;
        let a = an(m);
        if !a.is_self_projective().unwrap().holds() {
            continue;
        }
        for n in a.fi_lattice().unwrap().iter().filter(|n| !n.is_full()) {
            let t = a.is_semiprime_submodule(n).unwrap();
            assert_eq!(
                t.definition.holds(),
                t.element.holds(),
                "{} {n:?}",
                m.name()
            );
        }
    }
}

#[test]
fn minimal_primes_examples() {
    let a2 = catalog::mod_a2();
    let mp = an(&a2).minimal_primes().unwrap();
    assert_eq!(mp, vec![sub(&a2, &[&[0, 1]]), sub(&a2, &[&[1, 0]])]);
    assert!(mp[0].meet(&mp[1]).is_zero());
    let s = catalog::simple_tz2();
    assert_eq!(an(&s).minimal_primes().unwrap(), vec![s.zero_submodule()]);
    let es = catalog::mod_es();
    let mp = an(&es).minimal_primes().unwrap();
    let meet = mp.iter().fold(es.whole(), |acc, p| acc.meet(p));
    assert!(!meet.is_zero());
}

#[test]
fn retractable_examples() {
    assert!(an(&catalog::mod_es()).is_retractable().unwrap().holds());
    let p1 = catalog::mod_p1();
    let r = an(&p1).is_retractable().unwrap();
    assert_eq!(r.witness().unwrap().submodules[0].rows, vec![vec![1, 0]]);
    assert!(an(&catalog::simple_col()).is_retractable().unwrap().holds());
}

#[test]
fn retractable_matches_lattice_scan() {
    for fm in catalog::all_fixture_modules() {
        let m = &fm.module;
        let a = an(m);
        let scan = a
            .lattice()
            .unwrap()
            .iter()
            .filter(|n| !n.is_zero())
            .all(|n| !hom_into(m, n).unwrap().is_zero());
        assert_eq!(a.is_retractable().unwrap().holds(), scan, "{}", m.name());
    }
}

#[test]
fn duo_examples() {
    assert!(an(&catalog::mod_es()).is_duo().unwrap().holds());
    let q = es_mod_s();
    let w = an(&q).is_duo().unwrap();
    let w = w.witness().unwrap();
    let line = Subspace::span(q.prime(), 2, &w.submodules[0].rows);
    assert_eq!(line.dim(), 1);
    let f = Matrix::from_rows(q.prime(), 2, &w.maps[0].rows).unwrap();
    assert!(!line.image_under(&f).is_subspace_of(&line));
    let f2 = Arc::new(catalog::ring_f2f2());
    let s1 = ModulePresentation::new(
        "s1",
        f2.clone(),
        1,
        vec![
            Matrix::identity(f2.prime(), 1),
            Matrix::zeros(f2.prime(), 1, 1),
        ],
    );
    let s2 = ModulePresentation::new(
        "s2",
        f2.clone(),
        1,
        vec![
            Matrix::zeros(f2.prime(), 1, 1),
            Matrix::identity(f2.prime(), 1),
        ],
    );
    assert!(an(&direct_sum(&[&s1, &s2]).unwrap())
        .is_duo()
        .unwrap()
        .holds());
}

#[test]
fn multiplication_matches_ideal_scan() {
    for fm in catalog::all_fixture_modules() {
        let m = &fm.module;
        let a = an(m);
        let e = a.endo();
        let ideals = two_sided_ideals(&e.algebra, 4096).unwrap();
        let images: Vec<Subspace> = ideals
            .iter()
            .map(|i| {
                let mats: Vec<Matrix> = i.basis_vectors().map(|c| e.matrix_of(c)).collect();
                HomBasis::span_of(m.prime(), m.dim(), m.dim(), &mats).image_span()
            })
            .collect();
        let scan = a
            .lattice()
            .unwrap()
            .iter()
            .all(|n| images.contains(n.space()));
        assert_eq!(
            a.is_multiplication_over_endo().unwrap().holds(),
            scan,
            "{}",
            m.name()
        );
    }
}

#[test]
fn self_projective_examples() {
    for ring in catalog::all_rings() {
        let reg = regular_module(&Arc::new(ring));
        assert!(
            an(&reg).is_self_projective().unwrap().holds(),
            "{}",
            reg.name()
        );
    }
    let es = catalog::mod_es();
    let w = an(&es).is_self_projective().unwrap();
    assert!(!w.holds());
    let (q, proj) = quotient(&es, &es_alias("S")).unwrap();
    let lifted: Vec<Matrix> = hom_space(&es, &es)
        .unwrap()
        .mats()
        .iter()
        .map(|f| proj.mul(f))
        .collect();
    assert_eq!(HomBasis::span_of(es.prime(), 3, 2, &lifted).dim(), 1);
    assert_eq!(hom_space(&es, &q).unwrap().dim(), 4);
    for m in [
        catalog::mod_a2(),
        catalog::mod_m22(),
        catalog::simple_col(),
        q,
    ] {
        assert!(an(&m).is_semisimple().unwrap().holds());
        assert!(an(&m).is_self_projective().unwrap().holds(), "{}", m.name());
    }
}

/// Lifting checked map by map: every element of `Hom(M, M/K)` equals
/// `proj * f` for some enumerated endomorphism `f`.
#[test]
fn self_projective_matches_enumeration() {
    for fm in catalog::all_fixture_modules() {
        let m = &fm.module;
        let a = an(m);
        let ends = all_homs(m, m);
        let mut all_lift = true;
        for k in a.lattice().unwrap() {
            let (q, proj) = quotient(m, k).unwrap();
            let lifted: Vec<Matrix> = ends.iter().map(|f| proj.mul(f)).collect();
            all_lift &= all_homs(m, &q).iter().all(|g| lifted.contains(g));
        }
        assert_eq!(
            a.is_self_projective().unwrap().holds(),
            all_lift,
            "{}",
            m.name()
        );
    }
}

#[test]
fn singularity() {
    assert!(an(&catalog::mod_a2()).is_non_m_singular().unwrap().holds());
    let es = catalog::mod_es();
    let a = an(&es);
    assert!(!a.is_non_m_singular().unwrap().holds());
    assert_eq!(a.singular_lower(&es).unwrap(), *es_alias("S").space());
    let ms = make_singular_quotient(&es, &es_alias("K")).unwrap();
    assert_eq!(ms.dim(), 1);
    let a2 = catalog::mod_a2();
    assert_eq!(
        make_singular_quotient(&a2, &sub(&a2, &[&[1, 0]])).map(|_| ()),
        Err(Error::NotEssential)
    );
}

/// `Z(N)` lower bound by enumeration: images of maps whose kernel contains
/// a nonzero vector of every nonzero cyclic submodule.
#[test]
fn singular_lower_matches_enumeration() {
    for fm in catalog::all_fixture_modules() {
        let m = &fm.module;
        let a = an(m);
        let mut images = Vec::new();
        for f in all_homs(m, m) {
            let ker = Submodule::trusted(crate::fplin::nullspace(&f));
            if latt::is_essential(m, &ker) {
                for j in 0..f.cols() {
                    images.push(f.column(j));
                }
            }
        }
        let brute = Subspace::span(m.prime(), m.dim(), &images);
        assert_eq!(a.singular_lower(m).unwrap(), brute, "{}", m.name());
    }
}

#[test]
fn compressibility() {
    assert!(an(&catalog::mod_a2())
        .is_essentially_compressible()
        .unwrap()
        .holds());
    assert!(!an(&catalog::mod_es())
        .is_essentially_compressible()
        .unwrap()
        .holds());
    assert!(an(&catalog::simple_col())
        .is_essentially_compressible()
        .unwrap()
        .holds());
    assert!(!an(&catalog::mod_es())
        .is_weakly_compressible()
        .unwrap()
        .holds());
    assert!(an(&catalog::mod_a2())
        .is_weakly_compressible()
        .unwrap()
        .holds());
    assert!(an(&catalog::simple_dn())
        .is_weakly_compressible()
        .unwrap()
        .holds());
}

#[test]
fn weakly_compressible_matches_enumeration() {
    for fm in catalog::all_fixture_modules() {
        let m = &fm.module;
        let a = an(m);
        let brute = a
            .lattice()
            .unwrap()
            .iter()
            .filter(|n| !n.is_zero())
            .all(|n| {
                enumerate(&hom_into(m, n).unwrap(), 1 << 16)
                    .unwrap()
                    .iter()
                    .any(|f| !f.mul(f).is_zero())
            });
        assert_eq!(
            a.is_weakly_compressible().unwrap().holds(),
            brute,
            "{}",
            m.name()
        );
    }
}

#[test]
fn semiprojective_examples() {
    for ring in catalog::all_rings() {
        let reg = regular_module(&Arc::new(ring));
        assert!(
            an(&reg).is_semiprojective().unwrap().holds(),
            "{}",
            reg.name()
        );
    }
    assert!(an(&catalog::simple_tz2())
        .is_semiprojective()
        .unwrap()
        .holds());
    assert!(!an(&catalog::mod_es()).is_semiprojective().unwrap().holds());
}

#[test]
fn semiprojective_matches_enumeration() {
    for fm in catalog::all_fixture_modules() {
        let m = &fm.module;
        let ends = all_homs(m, m);
        let brute = ends.iter().all(|f| {
            let image = Subspace::row_space(&f.transpose());
            let fs: std::collections::BTreeSet<Vec<Vec<u8>>> =
                ends.iter().map(|g| f.mul(g).to_rows()).collect();
            let target: std::collections::BTreeSet<Vec<Vec<u8>>> = ends
                .iter()
                .filter(|g| (0..g.cols()).all(|j| image.contains(&g.column(j)).unwrap()))
                .map(|g| g.to_rows())
                .collect();
            fs == target
        });
        assert_eq!(
            an(m).is_semiprojective().unwrap().holds(),
            brute,
            "{}",
            m.name()
        );
    }
}

#[test]
fn monoform() {
    let s = catalog::simple_tz2();
    assert!(an(&s).is_monoform(&s.whole()).unwrap().holds());
    let es = catalog::mod_es();
    assert!(!an(&es).is_monoform(&es.whole()).unwrap().holds());
    assert!(an(&catalog::mod_a2())
        .has_enough_monoforms()
        .unwrap()
        .holds());
}

#[test]
fn monoform_matches_enumeration() {
    for fm in catalog::all_fixture_modules() {
        let m = &fm.module;
        let a = an(m);
        for s in a.lattice().unwrap().iter().filter(|s| !s.is_zero()) {
            let (ms, _) = carve(m, s).unwrap();
            let sub_lat = all_submodules(&ms, 4096).unwrap();
            let brute = sub_lat.iter().filter(|x| !x.is_zero()).all(|x| {
                let (mx, _) = carve(&ms, x).unwrap();
                all_homs(&mx, &ms)
                    .iter()
                    .all(|f| f.is_zero() || f.rank() == mx.dim())
            });
            assert_eq!(
                a.is_monoform(s).unwrap().holds(),
                brute,
                "{} {s:?}",
                m.name()
            );
        }
    }
}

#[test]
fn injectivity() {
    let a2 = catalog::mod_a2();
    assert_eq!(an(&a2).regular_submodules().unwrap(), vec![a2.whole()]);
    let es = catalog::mod_es();
    let (cs, _) = carve(&es, &es_alias("S")).unwrap();
    assert!(!an(&es).is_m_injective(&cs).unwrap().holds());
    assert!(an(&es).is_m_injective(&es).unwrap().holds());
    for m in [catalog::mod_a2(), catalog::mod_m22(), es_mod_s()] {
        assert!(an(&m).is_m_injective(&m).unwrap().holds(), "{}", m.name());
    }
}

#[test]
fn injectivity_matches_enumeration() {
    for fm in catalog::all_fixture_modules() {
        let m = &fm.module;
        let a = an(m);
        let whole = all_homs(m, m);
        let mut brute = true;
        for x in a.lattice().unwrap() {
            let (mx, incl) = carve(m, x).unwrap();
            let restricted: Vec<Matrix> = whole.iter().map(|f| f.mul(&incl)).collect();
            brute &= all_homs(&mx, m).iter().all(|g| restricted.contains(g));
        }
        assert_eq!(a.is_m_injective(m).unwrap().holds(), brute, "{}", m.name());
    }
}

#[test]
fn goldie_reports() {
    let a2 = catalog::mod_a2();
    let g = an(&a2).goldie_report().unwrap();
    assert_eq!(
        (g.udim, g.left_annihilators, g.semiprime_goldie),
        (2, 4, true)
    );
    let es = catalog::mod_es();
    let g = an(&es).goldie_report().unwrap();
    assert_eq!(
        (g.udim, g.left_annihilators, g.semiprime_goldie),
        (1, 5, false)
    );
    let m22 = catalog::mod_m22();
    assert!(an(&m22).goldie_report().unwrap().prime_goldie);
}

#[test]
fn report_has_witnesses_for_false_verdicts() {
    for fm in catalog::all_fixture_modules() {
        let r = an(&fm.module).report(fm.progenerator);
        for (name, ans) in r.verdicts() {
            assert_ne!(ans, Answer::Unknown, "{} {name}", fm.module.name());
            if ans == Answer::False {
                assert!(
                    r.witnesses.contains_key(name),
                    "{} {name}",
                    fm.module.name()
                );
            }
        }
    }
}

#[test]
fn zero_budget_is_unknown() {
    let es = catalog::mod_es();
    let r = Analysis::new(&es, Budget::none()).report(false);
    assert_eq!(r.duo, Answer::Unknown);
    assert_eq!(r.semiprime, Answer::Unknown);
    assert!(r.lattice_size.is_none());
}
