use tokbin::engine::{initial_configuration, run, InitSpec, NoMonitor, Trace};
use tokbin::harness::{coloring_window, step_budget, suite, verify_coloring, ColoringVerdict};
use tokbin::protocol::{Color, Protocol};
use tokbin::topology::{bfs_oracle, is_bipartite, Network};

fn colored_run(net: &Network, spec: &InitSpec) -> Trace {
    let ecc = bfs_oracle(net).eccentricity as u64;
    let budget = step_budget(net) + coloring_window(net) + 3 * (1 << ecc);
    let cfg = initial_configuration(net, spec, true).unwrap();
    run(net, &Protocol::default(), cfg, budget, &mut NoMonitor)
}

fn bipartite_suite() -> Vec<(&'static str, Network)> {
    suite::standard().into_iter().filter(|(_, net)| is_bipartite(net).is_some()).collect()
}

#[test]
fn bipartite_members_are_the_expected_ones() {
    let names: Vec<_> = bipartite_suite().into_iter().map(|(n, _)| n).collect();
    assert_eq!(names, ["P2", "P3", "C4", "S3"]);
}

#[test]
fn overlay_settles_to_a_proper_coloring() {
    for (name, net) in bipartite_suite() {
        for spec in [InitSpec::AllReset, InitSpec::Legal] {
            let trace = colored_run(&net, &spec);
            let verdict = verify_coloring(&net, &trace).unwrap();
            assert!(matches!(verdict, ColoringVerdict::Proper { .. }), "{name} {spec:?}: {verdict:?}");
        }
        let mut proper = 0;
        for seed in 0..200 {
            let trace = colored_run(&net, &InitSpec::Random(seed));
            match verify_coloring(&net, &trace).unwrap() {
                ColoringVerdict::Proper { .. } => proper += 1,
                // only a protocol that never stabilizes may skip the check
                ColoringVerdict::NotStabilized => assert_eq!(name, "C4", "seed {seed}"),
                other => panic!("{name} seed {seed}: {other:?}"),
            }
        }
        assert!(proper > 0, "{name}");
    }
}

#[test]
fn path_of_five_alternates_and_star_leaves_are_white() {
    let trace = colored_run(&suite::path(5), &InitSpec::AllReset);
    assert!(matches!(verify_coloring(&suite::path(5), &trace).unwrap(), ColoringVerdict::Proper { .. }));
    let last = trace.last();
    let colors: Vec<_> = last.states.iter().map(|s| s.color.unwrap()).collect();
    assert_eq!(colors, [Color::Black, Color::White, Color::Black, Color::White, Color::Black]);

    let star = suite::star(4);
    let trace = colored_run(&star, &InitSpec::AllReset);
    assert!(trace.last().states[1..].iter().all(|s| s.color == Some(Color::White)));
}

#[test]
fn even_cycle_is_properly_colored() {
    let net = suite::cycle(6);
    let trace = colored_run(&net, &InitSpec::AllReset);
    assert!(matches!(verify_coloring(&net, &trace).unwrap(), ColoringVerdict::Proper { .. }));
}

#[test]
fn odd_graphs_are_rejected() {
    let net = suite::cycle(3);
    let trace = colored_run(&net, &InitSpec::AllReset);
    assert!(verify_coloring(&net, &trace).is_err());
    let plain = run(&suite::path(3), &Protocol::default(), initial_configuration(&suite::path(3), &InitSpec::AllReset, false).unwrap(), 5, &mut NoMonitor);
    assert!(verify_coloring(&suite::path(3), &plain).is_err());
}
