//! Group presentations and the SFTs built from them.
//!
//! For `Γ = ⟨J | R⟩` the ports are `J ⊔ J⁻¹`, written `g` and `g'`. The
//! Cayley SFT asks every port to be used by an edge to its inverse port, and
//! every relator to be a cycle; NN constraints then restrict the labels
//! across single edges.

use std::collections::BTreeSet;

use crate::alphabet::{Alphabets, Label, LabelAlphabet, Port, PortAlphabet};
use crate::builtin::{free_ports, grid_source, monochromatic_grid, FreeTree, PeriodicColoring};
use crate::canonical::{canonicalize_raw, CanonicalGraph};
use crate::error::{Error, Result};
use crate::language::{prefix_close, PrefixLanguage};
use crate::sft::{is_member, ConstraintGroup, Mode, SftDefinition, ShapeRule};
use crate::source::{GraphSource, LazySource};
use crate::symmetry::{is_covering, CoveringVerdict};
use crate::word::{Letter, PathWord};

/// A generator or its inverse.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct GroupLetter {
    pub generator: usize,
    pub inverse: bool,
}

impl GroupLetter {
    fn inverted(self) -> Self {
        GroupLetter { inverse: !self.inverse, ..self }
    }

    /// The port leaving along this letter.
    pub fn port(self) -> Port {
        Port((2 * self.generator + usize::from(self.inverse)) as u8)
    }

    /// The path letter: `g ↦ (g, g')`, `g⁻¹ ↦ (g', g)`.
    pub fn letter(self) -> Letter {
        Letter::new(self.port(), self.inverted().port())
    }
}

/// `⟨J | R⟩` with freely reduced relators.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GroupPresentation {
    generators: Vec<String>,
    relators: Vec<Vec<GroupLetter>>,
}

impl GroupPresentation {
    pub fn new(generators: Vec<String>, relators: Vec<Vec<GroupLetter>>) -> Result<Self> {
        if generators.is_empty() {
            return Err(Error::InvalidPresentation("no generators".into()));
        }
        if generators.iter().collect::<BTreeSet<_>>().len() != generators.len() {
            return Err(Error::InvalidPresentation("duplicate generator".into()));
        }
        if 2 * generators.len() > u8::MAX as usize {
            return Err(Error::InvalidPresentation("too many generators".into()));
        }
        let mut reduced = Vec::new();
        for r in relators {
            if r.iter().any(|l| l.generator >= generators.len()) {
                return Err(Error::InvalidPresentation("relator uses an undeclared generator".into()));
            }
            let r = free_reduce(&r);
            if r.is_empty() {
                return Err(Error::InvalidPresentation("relator reduces to the empty word".into()));
            }
            reduced.push(r);
        }
        Ok(GroupPresentation { generators, relators: reduced })
    }

    /// Parses relators written as generator symbols, each optionally followed
    /// by `inverse_suffix`; the longest matching symbol wins.
    pub fn parse(generators: &[String], relators: &[String], inverse_suffix: &str) -> Result<Self> {
        if inverse_suffix.is_empty() {
            return Err(Error::InvalidPresentation("empty inverse suffix".into()));
        }
        let mut parsed = Vec::new();
        for r in relators {
            let mut rest = r.as_str();
            let mut word = Vec::new();
            while !rest.trim_start().is_empty() {
                rest = rest.trim_start();
                let (generator, symbol) = generators
                    .iter()
                    .enumerate()
                    .filter(|(_, g)| !g.is_empty() && rest.starts_with(g.as_str()))
                    .max_by_key(|(_, g)| g.len())
                    .ok_or_else(|| Error::InvalidPresentation(format!("cannot read relator `{r}` at `{rest}`")))?;
                rest = &rest[symbol.len()..];
                let inverse = rest.starts_with(inverse_suffix);
                if inverse {
                    rest = &rest[inverse_suffix.len()..];
                }
                word.push(GroupLetter { generator, inverse });
            }
            parsed.push(word);
        }
        GroupPresentation::new(generators.to_vec(), parsed)
    }

    /// Renders relators with the given inverse suffix.
    pub fn render_relators(&self, inverse_suffix: &str) -> Vec<String> {
        self.relators
            .iter()
            .map(|r| r.iter().map(|l| format!("{}{}", self.generators[l.generator], if l.inverse { inverse_suffix } else { "" })).collect())
            .collect()
    }

    /// `⟨a, b | aba⁻¹b⁻¹⟩`.
    pub fn z2() -> Self {
        let l = |generator, inverse| GroupLetter { generator, inverse };
        GroupPresentation::new(vec!["a".into(), "b".into()], vec![vec![l(0, false), l(1, false), l(0, true), l(1, true)]])
            .expect("valid")
    }

    /// The free group on `k` generators.
    pub fn free(k: usize) -> Self {
        let names = free_ports(k).into_iter().step_by(2).collect();
        GroupPresentation::new(names, vec![]).expect("valid")
    }

    pub fn generators(&self) -> &[String] {
        &self.generators
    }

    pub fn relators(&self) -> &[Vec<GroupLetter>] {
        &self.relators
    }

    /// Ports `g, g'` for every generator `g`.
    pub fn ports(&self) -> PortAlphabet {
        PortAlphabet::new(self.generators.iter().flat_map(|g| [g.clone(), format!("{g}'")])).expect("distinct generators")
    }

    pub fn alphabets(&self, labels: LabelAlphabet) -> Alphabets {
        Alphabets::new(self.ports(), labels)
    }

    /// A relator as a path: `g ↦ (g, g')`, `g⁻¹ ↦ (g', g)`.
    pub fn relator_path(r: &[GroupLetter]) -> PathWord {
        PathWord::from_letters(r.iter().map(|l| l.letter()))
    }

    /// Whether this is `Z²` in the form `xyx⁻¹y⁻¹` up to rotation and inversion.
    fn is_z2(&self) -> bool {
        if self.generators.len() != 2 || self.relators.len() != 1 {
            return false;
        }
        let r = &self.relators[0];
        r.len() == 4 && r[0].generator != r[1].generator && r[2] == r[0].inverted() && r[3] == r[1].inverted()
    }
}

fn free_reduce(r: &[GroupLetter]) -> Vec<GroupLetter> {
    let mut out: Vec<GroupLetter> = Vec::new();
    for &l in r {
        if out.last() == Some(&l.inverted()) {
            out.pop();
        } else {
            out.push(l);
        }
    }
    out
}

/// Families (1) and (2): every port `p` is used, by an edge to its inverse port.
fn regularity_groups(ports: usize) -> Vec<ConstraintGroup> {
    (0..ports as u8)
        .map(|p| {
            let window = prefix_close((0..ports as u8).map(|q| PathWord::from_pairs(&[(p, q)])));
            ConstraintGroup::new(window, ShapeRule::PortInverse { port: Port(p), inverse: Port(p ^ 1) })
        })
        .collect()
}

/// `cayleySft`: the Cayley SFT of `p` over the given labels.
pub fn cayley_sft(p: &GroupPresentation, labels: LabelAlphabet) -> SftDefinition {
    let alphabets = p.alphabets(labels);
    let mut groups = regularity_groups(alphabets.port_count());
    for r in &p.relators {
        let word = GroupPresentation::relator_path(r);
        groups.push(ConstraintGroup::new(prefix_close([word.clone()]), ShapeRule::RelatorCycle { word }));
    }
    SftDefinition::new(alphabets, Mode::Forbid, groups).expect("generated groups fit the alphabets")
}

/// Forbids the listed label pairs across edges traversed by `letter`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct NnConstraint {
    pub letter: Letter,
    pub forbidden: BTreeSet<(Label, Label)>,
}

impl NnConstraint {
    pub fn new(letter: Letter, forbidden: impl IntoIterator<Item = (Label, Label)>) -> Self {
        NnConstraint { letter, forbidden: forbidden.into_iter().collect() }
    }

    /// The same pairs on every generator letter and its inverse.
    pub fn on_all_letters(p: &GroupPresentation, forbidden: &[(Label, Label)]) -> Vec<NnConstraint> {
        (0..p.generators.len())
            .flat_map(|g| [false, true].map(|inverse| GroupLetter { generator: g, inverse }.letter()))
            .map(|letter| NnConstraint::new(letter, forbidden.iter().copied()))
            .collect()
    }
}

/// `nnSft`: the Cayley SFT plus nearest-neighbour constraints.
pub fn nn_sft(p: &GroupPresentation, labels: LabelAlphabet, nn: &[NnConstraint]) -> Result<SftDefinition> {
    let base = cayley_sft(p, labels);
    let mut groups = base.groups().to_vec();
    for c in nn {
        if c.forbidden.is_empty() {
            continue;
        }
        let window = prefix_close([PathWord::from_letters([c.letter])]);
        groups.push(ConstraintGroup::new(window, ShapeRule::NearestNeighbor { letter: c.letter, pairs: c.forbidden.clone() }));
    }
    SftDefinition::new(base.alphabets().clone(), Mode::Forbid, groups)
}

/// The hard-square model: no two adjacent vertices both labelled `1`.
pub fn hard_square() -> SftDefinition {
    let p = GroupPresentation::z2();
    let nn = NnConstraint::on_all_letters(&p, &[(Label(1), Label(1))]);
    nn_sft(&p, LabelAlphabet::numeric(2), &nn).expect("valid")
}

/// Adjacent vertices carry different labels.
pub fn checkerboard() -> SftDefinition {
    let p = GroupPresentation::z2();
    let nn = NnConstraint::on_all_letters(&p, &[(Label(0), Label(0)), (Label(1), Label(1))]);
    nn_sft(&p, LabelAlphabet::numeric(2), &nn).expect("valid")
}

/// Ports `a, a', b, b'`, every port used by an edge `pp'`, one label.
pub fn directed_two_regular_sft() -> SftDefinition {
    SftDefinition::new(Alphabets::grid(1), Mode::Forbid, regularity_groups(4)).expect("valid")
}

/// The window `{ε, aa', bb', aa'bb', bb'aa'}` of the square.
pub fn square_window() -> PrefixLanguage {
    prefix_close([PathWord::from_pairs(&[(0, 1), (2, 3)]), PathWord::from_pairs(&[(2, 3), (0, 1)])])
}

/// The unlabelled unit square, as seen through [`square_window`] in the grid.
pub fn square_shape() -> CanonicalGraph {
    monochromatic_grid().cut(&square_window())
}

/// Directed 2-regular, and the square window must show exactly the unit square.
pub fn locally_grid_like_sft() -> SftDefinition {
    let mut groups = regularity_groups(4);
    groups.push(ConstraintGroup::new(square_window(), ShapeRule::AllExcept(BTreeSet::from([square_shape()]))));
    SftDefinition::new(Alphabets::grid(1), Mode::Forbid, groups).expect("valid")
}

/// Every graph over the grid ports with one label.
pub fn full_shift() -> SftDefinition {
    SftDefinition::new(Alphabets::grid(1), Mode::Forbid, vec![]).expect("valid")
}

/// A named example SFT.
#[derive(Clone, Debug)]
pub struct CatalogEntry {
    pub name: &'static str,
    pub description: &'static str,
    pub sft: SftDefinition,
}

/// The built-in example SFTs.
pub fn catalog() -> Vec<CatalogEntry> {
    let entry = |name, description, sft| CatalogEntry { name, description, sft };
    vec![
        entry("full-shift", "all graphs on ports a, a', b, b' with one label", full_shift()),
        entry("directed-2-regular", "every port used, edges join p to p'", directed_two_regular_sft()),
        entry("locally-grid-like", "directed 2-regular, and the square window is the unit square", locally_grid_like_sft()),
        entry("cayley-z2", "Cayley SFT of <a,b | aba'b'> with one label", cayley_sft(&GroupPresentation::z2(), LabelAlphabet::numeric(1))),
        entry("cayley-f2", "Cayley SFT of the free group <a,b> with one label", cayley_sft(&GroupPresentation::free(2), LabelAlphabet::numeric(1))),
        entry("hard-square", "Z² NN constraints forbidding adjacent 1s", hard_square()),
        entry("checkerboard", "Z² NN constraints forbidding equal neighbours", checkerboard()),
    ]
}

pub fn catalog_entry(name: &str) -> Option<CatalogEntry> {
    catalog().into_iter().find(|e| e.name == name)
}

/// A finite group given by its multiplication table.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MultiplicationTable {
    pub elements: Vec<String>,
    pub product: Vec<Vec<usize>>,
    pub generators: Vec<usize>,
}

impl MultiplicationTable {
    pub fn validate(&self) -> Result<usize> {
        let n = self.elements.len();
        let bad = |m: &str| Err(Error::InvalidPresentation(m.into()));
        if n == 0 || self.product.len() != n || self.product.iter().any(|r| r.len() != n || r.iter().any(|&x| x >= n)) {
            return bad("product table must be square over the elements");
        }
        let Some(e) = (0..n).find(|&e| (0..n).all(|x| self.product[e][x] == x && self.product[x][e] == x)) else {
            return bad("no identity element");
        };
        for x in 0..n {
            if !(0..n).any(|y| self.product[x][y] == e) {
                return bad("an element has no inverse");
            }
            for y in 0..n {
                for z in 0..n {
                    if self.product[self.product[x][y]][z] != self.product[x][self.product[y][z]] {
                        return bad("product is not associative");
                    }
                }
            }
        }
        if self.generators.is_empty() || self.generators.iter().any(|&g| g >= n) {
            return bad("generators must be elements");
        }
        Ok(e)
    }

    /// Right Cayley graph pointed at the identity: port `g` of `x` joins port
    /// `g'` of `x·g`.
    pub fn cayley_graph(&self, label: impl Fn(usize) -> Label) -> Result<CanonicalGraph> {
        let e = self.validate()?;
        let gens = &self.generators;
        canonicalize_raw(2 * gens.len(), self.elements.len(), e, label, |x, p| {
            let g = gens[p.index() / 2];
            if p.index() % 2 == 0 {
                Some((self.product[x][g], Port(p.0 + 1)))
            } else {
                let y = (0..self.elements.len()).find(|&y| self.product[y][g] == x).expect("latin square");
                Some((y, Port(p.0 - 1)))
            }
        })
        .map_err(|_| Error::InvalidPresentation("generators do not generate the group".into()))
    }

    /// Port alphabet `g, g'` named after the generator elements.
    pub fn ports(&self) -> PortAlphabet {
        PortAlphabet::new(self.generators.iter().flat_map(|&g| [self.elements[g].clone(), format!("{}'", self.elements[g])]))
            .expect("distinct generators")
    }
}

/// `coveringFromCayley`: a coloured Cayley graph of `p` covering `x`.
///
/// For `Z²` the cover is the grid coloured by pulling labels back along the
/// two commuting permutations, and the answer is exact. For free groups the
/// cover is the tree coloured the same way, checked up to `max_radius`.
pub fn covering_from_cayley(p: &GroupPresentation, x: &CanonicalGraph, max_radius: usize) -> Result<CoveringVerdict> {
    let labels = LabelAlphabet::numeric(x.max_label().index() + 1);
    if x.port_count() != 2 * p.generators.len() || !is_member(&cayley_sft(p, labels), x) {
        return Err(Error::NotAMember("graph is not in the Cayley SFT of the presentation".into()));
    }
    let source = if p.is_z2() {
        // the relator may name the generators in either order; the grid is symmetric
        let order = |port: Port| {
            let mut v = 0;
            let mut n = 0;
            loop {
                v = x.neighbor(v, port).expect("regular").0;
                n += 1;
                if v == 0 {
                    return n;
                }
            }
        };
        let (oa, ob) = (order(Port(0)), order(Port(2)));
        let coloring = PeriodicColoring::from_fn(oa, ob, |i, j| {
            let mut v = 0;
            for _ in 0..i {
                v = x.neighbor(v, Port(0)).expect("regular").0;
            }
            for _ in 0..j {
                v = x.neighbor(v, Port(2)).expect("regular").0;
            }
            x.label(v)
        });
        grid_source(coloring)
    } else if p.relators.is_empty() {
        let tree = FreeTree::pulled_back(p.generators.len(), x.clone())?;
        GraphSource::Lazy(LazySource::new(std::sync::Arc::new(tree), vec![]))
    } else {
        return Err(Error::UnsupportedSource("covering Cayley graphs are built for Z² and free groups only".into()));
    };
    Ok(is_covering(&source, &GraphSource::Finite(x.clone()), max_radius))
}
