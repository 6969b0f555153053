//! The acceptance suite: one line per criterion, non-zero exit if any fails.

mod common;

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::Instant;

use cwclass::canon::{canonical_key, is_isomorphic, CanonKey};
use cwclass::certificate::check_certificate;
use cwclass::classifier::OPEN_CASES;
use cwclass::colouring::{classify_colouring_profiles, ColouringProfile, UNKNOWN_CASES};
use cwclass::enumerate::graphs_up_to;
use cwclass::names::graph;
use cwclass::pattern::{has_triangle, is_free, is_induced_subgraph, shape_tests};
use cwclass::scan::scan_pairs;
use cwclass::witnesses::{grid, thm4_g, thm4_h, thm5_g};
use cwclass::{
    classify_pair, classify_relation, cliquewidth, cliquewidth_at_most, equivalence_class, parse_cwexpr, Error,
    Graph, Relation, Status,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn p4_fixture() -> Outcome {
    let e = parse_cwexpr("eta(3,2; 3(d) + rho(3->2; rho(2->1; eta(3,2; 3(c) + eta(2,1; 2(b)+1(a))))))")
        .map_err(|e| e.to_string())?;
    let g = e.eval().graph;
    ensure(is_isomorphic(&g, &graph("P4")), || format!("evaluates to {:?}", g.edges()))?;
    ensure(e.width() == 3, || format!("width {}", e.width()))?;
    let (k, _) = cliquewidth(&graph("P4")).map_err(|e| e.to_string())?;
    ensure(k == 3, || format!("cliquewidth(P4) = {k}"))?;
    Ok("expression evaluates to P4 with width 3; exact clique-width 3".into())
}

fn cograph_boundary() -> Outcome {
    let all = graphs_up_to(6).map_err(|e| e.to_string())?;
    let p4 = graph("P4");
    let mut cographs = 0;
    for g in &all {
        let at_most_two = cliquewidth_at_most(g, 2).map_err(|e| e.to_string())?.is_some();
        let p4_free = !is_induced_subgraph(&p4, g);
        ensure(at_most_two == p4_free, || format!("disagreement on {:?}", g.edges()))?;
        cographs += usize::from(p4_free);
    }
    ensure(all.len() == 208, || format!("{} graphs enumerated", all.len()))?;
    Ok(format!("{} graphs, {cographs} P4-free, all with clique-width <= 2 exactly when P4-free", all.len()))
}

fn degree_two_bound() -> Outcome {
    let graphs: Vec<Graph> = graphs_up_to(8)
        .map_err(|e| e.to_string())?
        .into_iter()
        .filter(|g| g.max_degree() <= 2)
        .collect();
    let mut widest = 0;
    for g in &graphs {
        let (k, _) = cliquewidth(g).map_err(|e| e.to_string())?;
        ensure(k <= 4, || format!("clique-width {k} for {:?}", g.edges()))?;
        widest = widest.max(k);
    }
    Ok(format!("{} graphs of maximum degree <= 2, largest clique-width {widest}", graphs.len()))
}

fn certificates() -> Outcome {
    for n in 2..=6 {
        for (name, (g, p)) in [("layered bipartite", thm4_g(n)), ("layered cliques", thm5_g(n))]
            .map(|(s, r)| (s, r.unwrap()))
        {
            ensure(p.m == 0, || format!("{name}({n}) has m = {}", p.m))?;
            let report = check_certificate(&g, &p).map_err(|e| e.to_string())?;
            ensure(report.bound == Some(n), || format!("{name}({n}): {report}"))?;
        }
    }
    let (g, p) = grid(5).unwrap();
    let report = check_certificate(&g, &p).map_err(|e| e.to_string())?;
    ensure(p.m == 1 && report.bound == Some(3), || format!("grid(5): {report}"))?;
    Ok("both layered families certify bound n for n = 2..6; grid(5) with m = 1 certifies 3".into())
}

fn freeness() -> Outcome {
    let h_patterns = ["P6", "co(2P1+P2)"].map(graph);
    let g_patterns = ["3P2", "P2+P4", "P6", "co(P1+P4)"].map(graph);
    for n in 2..=4 {
        ensure(is_free(&thm4_h(n).unwrap(), &h_patterns).is_ok(), || format!("H_{n} contains a pattern"))?;
        let (g, _) = thm5_g(n).unwrap();
        ensure(is_free(&g, &g_patterns).is_ok(), || format!("G_{n} contains a pattern"))?;
    }
    Ok("complemented layered bipartite and layered clique graphs avoid their patterns for n = 2..4".into())
}

fn sorted_pair(a: CanonKey, b: CanonKey) -> (CanonKey, CanonKey) {
    if a <= b {
        (a, b)
    } else {
        (b, a)
    }
}

fn trichotomy() -> Outcome {
    let (table, _, outcomes) = scan_pairs(7, None).map_err(|e| e.to_string())?;
    let mut open = BTreeSet::new();
    let mut counts = [0usize; 3];
    let mut errors = Vec::new();
    for o in &outcomes {
        match &o.result {
            Ok((Status::Bounded, _)) => counts[0] += 1,
            Ok((Status::Unbounded, _)) => counts[1] += 1,
            Ok((Status::Open, _)) => {
                counts[2] += 1;
                open.insert(sorted_pair(canonical_key(table.graph(o.left)), canonical_key(table.graph(o.right))));
            }
            Ok((other, rule)) => errors.push(format!("status {other} from {rule}")),
            Err(Error::Invariant(msg)) => errors.push(msg.clone()),
            Err(e) => errors.push(e.to_string()),
        }
    }
    ensure(outcomes.len() == 784_378, || format!("{} pairs scanned", outcomes.len()))?;
    ensure(errors.is_empty(), || format!("{} pairs without a unique verdict, first: {}", errors.len(), errors[0]))?;
    let mut closure = BTreeSet::new();
    for (_, h1, h2) in OPEN_CASES {
        for (a, b) in equivalence_class(&graph(h1), &graph(h2)).members {
            if a.vertex_count() <= 7 && b.vertex_count() <= 7 {
                closure.insert(sorted_pair(canonical_key(&a), canonical_key(&b)));
            }
        }
    }
    ensure(open == closure, || {
        format!(
            "open set has {} pairs, closure of the listed cases has {}; {} only open, {} only listed",
            open.len(),
            closure.len(),
            open.difference(&closure).count(),
            closure.difference(&open).count()
        )
    })?;
    Ok(format!(
        "{} pairs: {} bounded, {} unbounded, {} open (= closure of the {} listed cases)",
        outcomes.len(),
        counts[0],
        counts[1],
        counts[2],
        OPEN_CASES.len()
    ))
}

fn swap_k3_paw(g: &Graph) -> Option<Graph> {
    if is_isomorphic(g, &graph("K3")) {
        Some(graph("paw"))
    } else if is_isomorphic(g, &graph("paw")) {
        Some(graph("K3"))
    } else {
        None
    }
}

fn equivalence_invariance() -> Outcome {
    let all = graphs_up_to(7).map_err(|e| e.to_string())?;
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let mut substituted = 0;
    // One pick in five is K3 or the paw so the substitution is exercised.
    let pick = |rng: &mut ChaCha8Rng| {
        if rng.gen_bool(0.2) {
            graph(if rng.gen_bool(0.5) { "K3" } else { "paw" })
        } else {
            all[rng.gen_range(0..all.len())].clone()
        }
    };
    for _ in 0..1000 {
        let (a, b) = (pick(&mut rng), pick(&mut rng));
        let status = |x: &Graph, y: &Graph| classify_pair(x, y).map(|v| v.status).map_err(|e| e.to_string());
        let base = status(&a, &b)?;
        let mut variants = vec![(b.clone(), a.clone()), (a.complement(), b.complement())];
        if let Some(a2) = swap_k3_paw(&a) {
            variants.push((a2, b.clone()));
        }
        if let Some(b2) = swap_k3_paw(&b) {
            variants.push((a.clone(), b2));
        }
        substituted += variants.len() - 2;
        for (x, y) in variants {
            let s = status(&x, &y)?;
            ensure(s == base, || format!("{base} for {:?} / {:?} but {s} for a variant", a.edges(), b.edges()))?;
        }
    }
    Ok(format!("1000 sampled pairs stable under swap, complement and {substituted} K3/paw substitutions"))
}

fn olariu() -> Outcome {
    let paw = graph("paw");
    let mut checked = 0;
    for g in graphs_up_to(8).map_err(|e| e.to_string())? {
        if !g.is_connected() || is_induced_subgraph(&paw, &g) {
            continue;
        }
        checked += 1;
        ensure(shape_tests(&g).is_complete_multipartite || !has_triangle(&g), || format!("{:?}", g.edges()))?;
    }
    Ok(format!("{checked} connected paw-free graphs are complete multipartite or triangle-free"))
}

fn relations() -> Outcome {
    let cases: &[(Relation, &[&str], Status)] = &[
        (Relation::Subgraph, &["P4"], Status::Bounded),
        (Relation::Subgraph, &["C3"], Status::Unbounded),
        (Relation::Minor, &["K4"], Status::Bounded),
        (Relation::Minor, &["K5", "K6"], Status::Unbounded),
        (Relation::TopologicalMinor, &["K4"], Status::Bounded),
        (Relation::TopologicalMinor, &["K1_4"], Status::Unbounded),
        (Relation::TopologicalMinor, &["K5"], Status::Unbounded),
    ];
    for (relation, family, expected) in cases {
        let graphs: Vec<Graph> = family.iter().map(|s| graph(s)).collect();
        let v = classify_relation(&graphs, *relation).map_err(|e| e.to_string())?;
        ensure(v.status == *expected, || format!("{relation:?} {family:?}: {v}"))?;
    }
    Ok(format!("{} fixtures reproduced", cases.len()))
}

fn colouring() -> Outcome {
    let all = graphs_up_to(6).map_err(|e| e.to_string())?;
    let profiles = all.iter().map(ColouringProfile::new).collect::<Result<Vec<_>, _>>().map_err(|e| e.to_string())?;
    let mut counts = [0usize; 3];
    for i in 0..all.len() {
        for j in i..all.len() {
            let v = classify_colouring_profiles(&all[i], &profiles[i], &all[j], &profiles[j])
                .map_err(|e| e.to_string())?;
            counts[match v.status {
                Status::NpComplete => 0,
                Status::Polynomial => 1,
                _ => 2,
            }] += 1;
        }
    }
    let mut listed = 0;
    for (a, b) in UNKNOWN_CASES {
        let (g1, g2) = (graph(a), graph(b));
        if g1.vertex_count() > 6 || g2.vertex_count() > 6 {
            continue;
        }
        listed += 1;
        for (x, y) in [(&g1, &g2), (&g2, &g1)] {
            let v = classify_pair_colouring(x, y)?;
            ensure(v == Status::Unknown, || format!("({a}, {b}) is {v}"))?;
        }
    }
    Ok(format!(
        "no conflicts over {} pairs ({} NP-complete, {} polynomial, {} unknown); {listed} listed open pairs within 6 vertices are Unknown",
        counts.iter().sum::<usize>(),
        counts[0],
        counts[1],
        counts[2]
    ))
}

fn classify_pair_colouring(a: &Graph, b: &Graph) -> Result<Status, String> {
    cwclass::classify_colouring(a, b).map(|v| v.status).map_err(|e| e.to_string())
}

fn expression_soundness() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(99);
    for _ in 0..200 {
        let n = rng.gen_range(1..=7);
        let k = rng.gen_range(1..=4);
        let e = common::random_cwexpr(&mut rng, n, k);
        let g = e.eval().graph;
        let (cw, _) = cliquewidth(&g).map_err(|e| e.to_string())?;
        ensure(cw <= e.width(), || format!("{e} has width {} but clique-width is {cw}", e.width()))?;
    }
    Ok("200 random expressions on <= 7 vertices bound the exact clique-width".into())
}

fn main() -> ExitCode {
    let criteria: [Criterion; 11] = [
        ("P4 fixture", p4_fixture),
        ("cograph boundary", cograph_boundary),
        ("degree-2 bound", degree_two_bound),
        ("certificate reproduction", certificates),
        ("freeness verification", freeness),
        ("trichotomy exactness", trichotomy),
        ("equivalence invariance", equivalence_invariance),
        ("Olariu property", olariu),
        ("relation dichotomies", relations),
        ("colouring table consistency", colouring),
        ("oracle/expression soundness", expression_soundness),
    ];
    let mut failed = 0;
    for (idx, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = check();
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("criterion {:>2} PASS {name} ({secs:.1}s): {detail}", idx + 1),
            Err(detail) => {
                failed += 1;
                println!("criterion {:>2} FAIL {name} ({secs:.1}s): {detail}", idx + 1);
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
