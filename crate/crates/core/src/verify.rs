//! The verification suite: twelve exact checks over canonical forms, the
//! metric, SFT duality, counts, symmetry, quotients, coverings and Cayley SFTs.

use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::time::{Duration, Instant};

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::alphabet::{Alphabets, Label, LabelAlphabet};
use crate::builtin::{
    free_tree_source, grid_source, grid_word, monochromatic_grid, monochromatic_torus, step_a, step_b, torus_graph,
    PeriodicColoring,
};
use crate::canonical::{canonicalize, CanonicalGraph};
use crate::cayley::{self, cayley_sft, GroupPresentation};
use crate::config::Caps;
use crate::error::Result;
use crate::language::PrefixLanguage;
use crate::metric::{distance, Distance};
use crate::random;
use crate::sft::{
    all_graphs_naive, colorings, enumerate, for_each_member, is_member, member_finite, member_up_to_radius, to_allow_form, to_allow_form_symbolic, to_forbid_form, to_forbid_form_symbolic,
    window_graphs, ConstraintGroup, Mode, SftDefinition, ShapeRule,
};
use crate::source::GraphSource;
use crate::symmetry::{
    classify_source, conjugate_stabilizer_check, is_covering, quotient, quotient_map, stabilizer, verify_window_preservation,
    Periodicity, SubgroupSpec,
};
use crate::word::{Letter, PathWord};

/// Knobs for the suite. `hard_square_counts` are the expected colouring
/// counts on the 2×2 and 3×3 tori; changing them is the negative control.
#[derive(Clone, Debug)]
pub struct SuiteOptions {
    pub caps: Caps,
    pub seed: u64,
    pub hard_square_counts: (usize, usize),
}

impl Default for SuiteOptions {
    fn default() -> Self {
        SuiteOptions { caps: Caps::default(), seed: 0x5eed, hard_square_counts: (7, 34) }
    }
}

/// Outcome of one check.
#[derive(Clone, Debug)]
pub struct CheckReport {
    pub id: usize,
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
    pub elapsed: Duration,
    pub budget: Duration,
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} {:>2} {:<28} {:>8.2}s / {:>3}s  {}",
            if self.passed { "PASS" } else { "FAIL" },
            self.id,
            self.name,
            self.elapsed.as_secs_f64(),
            self.budget.as_secs(),
            self.detail
        )
    }
}

type Check = fn(&SuiteOptions) -> Result<(bool, String)>;

/// `(name, runtime budget in seconds, check)` for every criterion, in order.
pub const CHECKS: [(&str, u64, Check); 12] = [
    ("canonical-form soundness", 10, canonical_soundness),
    ("ultrametric", 5, ultrametric),
    ("forbid/allow duality", 120, duality),
    ("hard-square counts", 5, hard_square_counts),
    ("stabilizer groups", 10, stabilizer_groups),
    ("grid quotients", 10, grid_quotients),
    ("separation", 60, separation),
    ("finite and periodic witness", 5, dichotomy_witness),
    ("cayley quotient stability", 10, cayley_stability),
    ("coverings", 30, coverings),
    ("enumeration oracle", 120, enumeration_oracle),
    ("conjugation", 30, conjugation),
];

/// Runs check `id` (1-based). A check passes when its assertions hold and it
/// finishes within its budget.
pub fn run_check(id: usize, opts: &SuiteOptions) -> CheckReport {
    let (name, budget, check) = CHECKS[id - 1];
    let budget = Duration::from_secs(budget);
    let start = Instant::now();
    let outcome = check(opts);
    let elapsed = start.elapsed();
    let (ok, mut detail) = match outcome {
        Ok(r) => r,
        Err(e) => (false, format!("error: {e}")),
    };
    if elapsed > budget {
        detail.push_str("; over budget");
    }
    CheckReport { id, name, passed: ok && elapsed <= budget, detail, elapsed, budget }
}

pub fn run_suite(opts: &SuiteOptions) -> Vec<CheckReport> {
    (1..=CHECKS.len()).map(|id| run_check(id, opts)).collect()
}

fn rng(opts: &SuiteOptions, salt: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(opts.seed ^ salt.wrapping_mul(0x9e37_79b9_7f4a_7c15))
}

fn canonical_soundness(opts: &SuiteOptions) -> Result<(bool, String)> {
    let mut rng = rng(opts, 1);
    let mut bad = 0;
    for _ in 0..1000 {
        let (ports, labels) = (rng.gen_range(1..=6), rng.gen_range(1..=3));
        let a = random::alphabets(ports, labels);
        let g = random::connected_graph(&mut rng, 12, ports, labels);
        let c = canonicalize(&g, &a)?;
        let mut same = canonicalize(&c.to_based_graph(&a), &a)? == c;
        for _ in 0..3 {
            same &= canonicalize(&random::shuffled(&mut rng, &g), &a)? == c;
        }
        bad += usize::from(!same);
    }
    Ok((bad == 0, format!("1000 graphs × 3 relabelings, {bad} mismatches")))
}

fn mutate(rng: &mut ChaCha8Rng, g: &crate::graph::BasedGraph) -> crate::graph::BasedGraph {
    let n = g.graph.vertex_count();
    match rng.gen_range(0..4) {
        0 => g.clone(),
        1 => {
            let mut h = g.clone();
            let v = rng.gen_range(0..n);
            h.graph.set_label(v, Label(1 - g.graph.label(v).0));
            h
        }
        2 => g.rebased(rng.gen_range(0..n)).expect("vertex exists"),
        _ => random::connected_graph(rng, 6, 2, 2),
    }
}

fn ultrametric(opts: &SuiteOptions) -> Result<(bool, String)> {
    let mut rng = rng(opts, 2);
    let a = random::alphabets(2, 2);
    let value = |d: Distance| match d {
        Distance::AtMost(_) => None,
        d => Some(d.value()),
    };
    let mut bad = 0;
    for _ in 0..500 {
        let x = random::connected_graph(&mut rng, 6, 2, 2);
        let (y, z) = (mutate(&mut rng, &x), mutate(&mut rng, &x));
        let s = |g: &crate::graph::BasedGraph| Ok::<_, crate::error::Error>(GraphSource::Finite(canonicalize(g, &a)?));
        let (x, y, z) = (s(&x)?, s(&y)?, s(&z)?);
        let d = |p: &GraphSource, q: &GraphSource| Ok::<_, crate::error::Error>(value(distance(p, q, 12)?));
        match (d(&x, &z)?, d(&x, &y)?, d(&y, &z)?) {
            (Some(xz), Some(xy), Some(yz)) if xz <= xy.max(yz) => {}
            _ => bad += 1,
        }
    }
    let grid = monochromatic_grid();
    let d3 = distance(&grid, &GraphSource::Finite(monochromatic_torus(3, 3)), 4)?;
    let d5 = distance(&grid, &GraphSource::Finite(monochromatic_torus(5, 5)), 4)?;
    let ok = bad == 0 && d3 == Distance::Exact(1) && d5 == Distance::Exact(2);
    Ok((ok, format!("500 triples, {bad} violations; grid/torus3 = {d3}, grid/torus5 = {d5}")))
}

/// Whether `d`, its allow form and that form's forbid form agree on `x`.
struct Duals {
    d: SftDefinition,
    allow: SftDefinition,
    forbid: SftDefinition,
}

impl Duals {
    /// Forms listing every allowed or forbidden window graph.
    fn explicit(d: SftDefinition, caps: &Caps) -> Result<Self> {
        let allow = to_allow_form(&d, caps)?;
        let forbid = to_forbid_form(&allow, caps)?;
        Ok(Duals { d, allow, forbid })
    }

    /// Forms whose shape sets are given by a predicate on window graphs.
    fn intensional(d: SftDefinition) -> Self {
        let allow = to_allow_form_symbolic(&d);
        let forbid = to_forbid_form_symbolic(&allow);
        Duals { d, allow, forbid }
    }

    fn agree(&self, x: &CanonicalGraph) -> bool {
        let m = is_member(&self.d, x);
        m == is_member(&self.allow, x) && m == is_member(&self.forbid, x)
    }
}

fn random_sft(rng: &mut ChaCha8Rng, alphabets: &Alphabets, caps: &Caps) -> Result<SftDefinition> {
    let ball = PrefixLanguage::ball(alphabets.port_count(), 1);
    let words: Vec<PathWord> = ball.words().filter(|w| w.is_empty() || rng.gen_bool(0.5)).cloned().collect();
    let window = PrefixLanguage::new(words)?;
    let shapes: BTreeSet<CanonicalGraph> =
        window_graphs(&window, alphabets, caps)?.into_iter().filter(|_| rng.gen_bool(0.3)).collect();
    let mode = if rng.gen_bool(0.5) { Mode::Forbid } else { Mode::Allow };
    SftDefinition::new(alphabets.clone(), mode, vec![ConstraintGroup::new(window, ShapeRule::Listed(shapes))])
}

/// Largest graphs on which the hard-square forms are compared. Every one of
/// the 6.7 million canonical graphs up to this size is checked; the next size
/// up has billions.
pub const HARD_SQUARE_DUALITY_VERTICES: usize = 3;

/// Hard-square's window has 17+ words, far too many window graphs to list,
/// so its dual forms are intensional; the small random SFTs use explicit lists.
fn duality(opts: &SuiteOptions) -> Result<(bool, String)> {
    let caps = &opts.caps;
    let hs = Duals::intensional(cayley::hard_square());
    let listable = to_allow_form(&hs.d, caps).is_ok();
    let everything = SftDefinition::new(hs.d.alphabets().clone(), Mode::Forbid, vec![])?;
    let (seen, bad) = (AtomicUsize::new(0), AtomicUsize::new(0));
    for_each_member(&everything, HARD_SQUARE_DUALITY_VERTICES, caps, |x| {
        seen.fetch_add(1, Ordering::Relaxed);
        if !hs.agree(x) {
            bad.fetch_add(1, Ordering::Relaxed);
        }
    })?;
    let (seen, mut bad) = (seen.into_inner(), bad.into_inner());
    let mut rng = rng(opts, 3);
    let small = random::alphabets(2, 2);
    let small_universe = all_graphs_naive(&small, 4);
    for _ in 0..5 {
        let duals = Duals::explicit(random_sft(&mut rng, &small, caps)?, caps)?;
        bad += small_universe.iter().filter(|x| !duals.agree(x)).count();
    }
    Ok((
        bad == 0,
        format!(
            "hard-square ({}) on all {seen} graphs with ≤{HARD_SQUARE_DUALITY_VERTICES} vertices, 5 random SFTs (listed) on all {} graphs with ≤4; {bad} disagreements",
            if listable { "listed" } else { "intensional, listing exceeds the cap" },
            small_universe.len()
        ),
    ))
}

/// Independent sets of the k×k torus by brute force over all labelings.
pub fn independent_sets_on_torus(k: usize) -> usize {
    let n = k * k;
    let id = |i: usize, j: usize| (i % k) * k + j % k;
    (0u64..1 << n)
        .filter(|set| {
            (0..k).all(|i| {
                (0..k).all(|j| {
                    let on = |v: usize| set >> v & 1 == 1;
                    !on(id(i, j)) || (!on(id(i + 1, j)) && !on(id(i, j + 1)))
                })
            })
        })
        .count()
}

fn hard_square_counts(opts: &SuiteOptions) -> Result<(bool, String)> {
    let hs = cayley::hard_square();
    let (e2, e3) = opts.hard_square_counts;
    let count = |k| colorings(&hs, &monochromatic_torus(k, k).to_based_graph(hs.alphabets())).map(|c| c.count);
    let (c2, c3) = (count(2)?, count(3)?);
    let (o2, o3) = (independent_sets_on_torus(2), independent_sets_on_torus(3));
    let ok = (c2, c3) == (e2, e3) && (o2, o3) == (e2, e3);
    Ok((ok, format!("2×2: {c2} (oracle {o2}, expected {e2}); 3×3: {c3} (oracle {o3}, expected {e3})")))
}

fn stabilizer_groups(_: &SuiteOptions) -> Result<(bool, String)> {
    let mut ok = true;
    let mut orders = Vec::new();
    for k in 2..=4 {
        let s = stabilizer(&monochromatic_torus(k, k));
        ok &= s.order() == k * k && s.check_axioms();
        orders.push(s.order());
    }
    let marked = stabilizer(&torus_graph(2, 2, |i, j| Label(u8::from(i == 0 && j == 0))));
    ok &= marked.order() == 1 && marked.check_axioms();
    Ok((ok, format!("torus orders {orders:?}, marked torus order {}", marked.order())))
}

fn square_lattice(k: usize) -> SubgroupSpec {
    SubgroupSpec::new([grid_word(k as i64, 0), grid_word(0, k as i64)])
}

fn grid_quotients(opts: &SuiteOptions) -> Result<(bool, String)> {
    let grid = monochromatic_grid();
    let mut ok = true;
    for k in 1..=5 {
        let q = quotient_map(&grid, &square_lattice(k), &opts.caps)?;
        ok &= q.graph == monochromatic_torus(k, k) && q.coset_map.check(q.graph.diameter() + 2).is_ok();
    }
    Ok((ok, "k = 1..5 canonical tori, coset maps checked".into()))
}

fn three_by_three(mask: u32) -> impl Fn(usize, usize) -> Label {
    move |i, j| Label((mask >> (3 * i + j) & 1) as u8)
}

fn separation(opts: &SuiteOptions) -> Result<(bool, String)> {
    let hs = cayley::hard_square();
    let h = square_lattice(3);
    let ball = PrefixLanguage::ball(4, 1);
    let (mut valid, mut ok, mut induced) = (0, true, 0);
    for mask in 0..1 << 9 {
        let f = three_by_three(mask);
        let grid = grid_source(PeriodicColoring::from_fn(3, 3, f));
        if member_up_to_radius(&hs, &grid, 3)?.is_violation() {
            continue;
        }
        valid += 1;
        ok &= member_finite(&hs, &quotient(&grid, &h, &opts.caps)?)?.is_member();
        let report = verify_window_preservation(&grid, &h, &ball, &opts.caps)?;
        ok &= report.ok();
        induced += report.induced_failures.len();
    }
    ok &= valid == 34;
    Ok((
        ok,
        format!("{valid} periodic colorings; quotients are members; traced radius-1 cuts preserved ({induced} induced cuts gain an edge)"),
    ))
}

fn dichotomy_witness(opts: &SuiteOptions) -> Result<(bool, String)> {
    let hs = cayley::hard_square();
    let torus = member_finite(&hs, &monochromatic_torus(2, 2))?;
    let grid = monochromatic_grid();
    let on_grid = member_up_to_radius(&hs, &grid, 5)?;
    let periods = [grid_word(1, 0), grid_word(0, 1)]
        .iter()
        .map(|u| Ok(distance(&grid, &grid.shift(u)?, 5)? == Distance::AtMost(5)))
        .collect::<Result<Vec<bool>>>()?;
    let class = classify_source(&grid, &opts.caps)?;
    let ok = torus.is_member()
        && on_grid == crate::sft::MembershipVerdict::ConsistentUpToRadius(5)
        && periods.iter().all(|&p| p)
        && matches!(class, Periodicity::StronglyPeriodic { .. });
    Ok((ok, format!("2×2 all-0 torus {torus:?}; all-0 grid {on_grid:?}, {class:?}")))
}

fn cayley_stability(_: &SuiteOptions) -> Result<(bool, String)> {
    let one = LabelAlphabet::numeric(1);
    let z2 = cayley_sft(&GroupPresentation::z2(), one.clone());
    let f2 = cayley_sft(&GroupPresentation::free(2), one);
    let tori = (1..=4).all(|k| is_member(&z2, &monochromatic_torus(k, k)));
    let tree = free_tree_source(2);
    let in_f2 = member_up_to_radius(&f2, &tree, 5)?;
    let in_z2 = member_up_to_radius(&z2, &tree, 2)?;
    let ok = tori && in_f2 == crate::sft::MembershipVerdict::ConsistentUpToRadius(5) && in_z2.is_violation();
    let witness = match &in_z2 {
        crate::sft::MembershipVerdict::Violation { witness, .. } => format!("violation at {:?}", witness.render(&Alphabets::grid(1).ports)),
        v => format!("{v:?}"),
    };
    Ok((ok, format!("tori 1..4 members: {tori}; tree in F2 {in_f2:?}; tree in Z² at radius 2: {witness}")))
}

fn coverings(_: &SuiteOptions) -> Result<(bool, String)> {
    let hs = cayley::hard_square();
    let z2 = GroupPresentation::z2();
    let (mut valid, mut covered) = (0, 0);
    for mask in 0..1 << 9 {
        let x = torus_graph(3, 3, three_by_three(mask));
        if !is_member(&hs, &x) {
            continue;
        }
        valid += 1;
        covered += usize::from(cayley::covering_from_cayley(&z2, &x, 6)?.is_yes());
    }
    let t3 = GraphSource::Finite(monochromatic_torus(3, 3));
    let t6 = GraphSource::Finite(monochromatic_torus(6, 6));
    let down = is_covering(&t6, &t3, 0).is_yes();
    let up = is_covering(&t3, &t6, 0);
    let witness_ok = up.is_no() && up.witness() == Some(&grid_word(3, 0));
    let ok = valid == 34 && covered == valid && down && witness_ok;
    Ok((
        ok,
        format!(
            "{covered}/{valid} 3×3 colorings covered; torus6→torus3 {}; torus3→torus6 witness {:?}",
            if down { "Yes" } else { "not Yes" },
            up.witness().map(|w| w.render(&Alphabets::grid(1).ports))
        ),
    ))
}

fn enumeration_oracle(opts: &SuiteOptions) -> Result<(bool, String)> {
    let mut universes: HashMap<(Vec<String>, Vec<String>), BTreeSet<CanonicalGraph>> = HashMap::new();
    let mut mismatched = Vec::new();
    let mut sizes = Vec::new();
    for entry in cayley::catalog() {
        let a = entry.sft.alphabets();
        let key = (a.ports.symbols().to_vec(), a.labels.symbols().to_vec());
        let universe = universes.entry(key).or_insert_with(|| all_graphs_naive(a, 3));
        let naive: BTreeSet<&CanonicalGraph> = universe.iter().filter(|x| is_member(&entry.sft, x)).collect();
        let fast = enumerate(&entry.sft, 3, &opts.caps)?;
        let fast: BTreeSet<&CanonicalGraph> = fast.members.iter().collect();
        if fast != naive {
            mismatched.push(entry.name);
        }
        sizes.push(format!("{} {}", entry.name, naive.len()));
    }
    Ok((mismatched.is_empty(), format!("members at ≤3 vertices: {}; mismatches {mismatched:?}", sizes.join(", "))))
}

fn random_grid_word(rng: &mut ChaCha8Rng, max_len: usize) -> PathWord {
    let letters: [Letter; 4] = [step_a(), step_a().reversed(), step_b(), step_b().reversed()];
    let n = rng.gen_range(0..=max_len);
    PathWord::from_letters((0..n).map(|_| *letters.choose(rng).expect("nonempty")))
}

fn conjugation(opts: &SuiteOptions) -> Result<(bool, String)> {
    let mut rng = rng(opts, 12);
    let mut bad = 0;
    for t in 0..50 {
        let (p, q) = (rng.gen_range(1..=2usize), rng.gen_range(1..=2usize));
        let table: Vec<Vec<u8>> = (0..p).map(|_| (0..q).map(|_| rng.gen_range(0..2)).collect()).collect();
        let colour = move |i: usize, j: usize| Label(table[i % p][j % q]);
        let u = random_grid_word(&mut rng, 3);
        let (s, h) = if t % 2 == 0 {
            let (k1, k2) = (p * rng.gen_range(1..=2), q * rng.gen_range(1..=2));
            let x = torus_graph(k1, k2, colour);
            let elements = stabilizer(&x).elements();
            let h = SubgroupSpec::new((0..rng.gen_range(1..=2)).map(|_| elements.choose(&mut rng).expect("identity").clone()));
            (GraphSource::Finite(x), h)
        } else {
            let (m1, m2) = (rng.gen_range(1..=3), rng.gen_range(1..=3));
            let grid = grid_source(PeriodicColoring::from_fn(p, q, colour));
            (grid, SubgroupSpec::new([grid_word((m1 * p) as i64, 0), grid_word(0, (m2 * q) as i64)]))
        };
        bad += usize::from(!conjugate_stabilizer_check(&s, &h, &u, &opts.caps)?);
    }
    Ok((bad == 0, format!("50 triples over tori and grid quotients, {bad} failures")))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn oracle_counts() {
        assert_eq!(independent_sets_on_torus(1), 1);
        assert_eq!(independent_sets_on_torus(2), 7);
        assert_eq!(independent_sets_on_torus(3), 34);
    }

    #[test]
    fn wrong_expected_count_fails() {
        let opts = SuiteOptions { hard_square_counts: (7, 35), ..SuiteOptions::default() };
        let r = run_check(4, &opts);
        assert!(!r.passed);
        assert!(r.to_string().starts_with("FAIL  4 hard-square counts"));
    }
}
