mod common;

use common::{assert_golden, fixture_path};
use modgoldie::algmod::catalog::all_fixtures;
use modgoldie::clitool::{load_fixture, render_fixture_file, FixtureFile};

#[test]
fn committed_fixture_files_match_the_catalog() {
    for fx in all_fixtures() {
        let text = render_fixture_file(&FixtureFile::from_fixture(&fx));
        assert_golden(&fixture_path(&fx.name), &text);
    }
}

#[test]
fn committed_fixture_files_load_and_validate() {
    for fx in all_fixtures() {
        let loaded = load_fixture(&fixture_path(&fx.name)).unwrap();
        assert_eq!(loaded.name, fx.name);
        assert_eq!(loaded.ring.triples(), fx.ring.triples());
        let names: Vec<&str> = loaded.modules.iter().map(|m| m.module.name()).collect();
        let expected: Vec<&str> = fx.modules.iter().map(|m| m.module.name()).collect();
        assert_eq!(names, expected);
        for (a, b) in loaded.modules.iter().zip(&fx.modules) {
            assert_eq!(a.module.action(), b.module.action());
            assert_eq!(a.aliases, b.aliases);
            assert_eq!(a.progenerator, b.progenerator);
        }
    }
}
