use super::gates::GateCatalog;
use super::graph::SimpleGraph;
use crate::cyclo::Cyclotomic;
use crate::error::{Error, Result};
use crate::limits::Limits;
use crate::matgrp::{closure, MatrixGroup, UnitaryMatrix, VectorAction};
use crate::structlab::{automorphism_group, AutTier};

/// Commutation graph of the nonidentity `n`-qubit Pauli operators modulo phase.
#[derive(Clone, Debug)]
pub struct PauliGraph {
    pub n: usize,
    /// Operator words over `IXYZ`, sorted by symplectic label.
    pub labels: Vec<String>,
    /// `2n`-bit labels: X-part in the high `n` bits, Z-part in the low ones,
    /// qubit 0 most significant in each.
    pub symplectic: Vec<u32>,
    /// Tensor products of the single-qubit Pauli matrices, phases as built.
    pub operators: Vec<UnitaryMatrix>,
    /// Least matrix among `{g, −g, ig, −ig}` for each vertex.
    pub reps: Vec<UnitaryMatrix>,
    pub graph: SimpleGraph,
}

fn word_of_label(n: usize, label: u32) -> String {
    (0..n)
        .map(|q| {
            let shift = n - 1 - q;
            let x = label >> (n + shift) & 1;
            let z = label >> shift & 1;
            match (x, z) {
                (0, 0) => 'I',
                (1, 0) => 'X',
                (1, 1) => 'Y',
                _ => 'Z',
            }
        })
        .collect()
}

/// Canonical phase representative of `m`.
pub fn phase_representative(m: &UnitaryMatrix) -> UnitaryMatrix {
    let i = Cyclotomic::i();
    let phases = [Cyclotomic::one(), Cyclotomic::from_int(-1), i.clone(), -&i];
    phases
        .iter()
        .map(|p| m.scale(p))
        .min()
        .expect("four candidates")
}

impl PauliGraph {
    pub fn new(n: usize) -> Result<Self> {
        if !(1..=3).contains(&n) {
            return Err(Error::InvalidArgument(format!(
                "Pauli graph needs 1 ≤ n ≤ 3, got {n}"
            )));
        }
        let cat = GateCatalog::new();
        let symplectic: Vec<u32> = (1..1u32 << (2 * n)).collect();
        let labels: Vec<String> = symplectic.iter().map(|&l| word_of_label(n, l)).collect();
        let operators = labels
            .iter()
            .map(|w| cat.pauli_word(w))
            .collect::<Result<Vec<_>>>()?;
        let reps: Vec<UnitaryMatrix> = operators.iter().map(phase_representative).collect();
        let mut graph = SimpleGraph::new(reps.len())?;
        for a in 0..reps.len() {
            for b in a + 1..reps.len() {
                if reps[a].commutes_with(&reps[b]) {
                    graph.add_edge(a, b)?;
                }
            }
        }
        Ok(PauliGraph {
            n,
            labels,
            symplectic,
            operators,
            reps,
            graph,
        })
    }

    /// Whether the operators with labels `a` and `b` commute, from the symplectic form.
    pub fn symplectic_commute(&self, a: u32, b: u32) -> bool {
        let n = self.n;
        let mask = (1u32 << n) - 1;
        let form = ((a >> n) & b & mask).count_ones() + ((b >> n) & a & mask).count_ones();
        form.is_multiple_of(2)
    }

    pub fn to_dot(&self) -> String {
        self.graph.to_dot(&format!("pauli{}", self.n), &self.labels)
    }
}

pub fn pauli_graph(n: usize) -> Result<PauliGraph> {
    PauliGraph::new(n)
}

/// Checks of the two-qubit graph against the generalized quadrangle GQ(2,2).
#[derive(Clone, Debug)]
pub struct QuadrangleReport {
    pub lines: Vec<Vec<usize>>,
    pub ovoid: Vec<usize>,
    pub petersen_map: Option<Vec<usize>>,
    pub automorphisms: u64,
    /// One message per failed check; empty when everything holds.
    pub failures: Vec<String>,
}

impl QuadrangleReport {
    pub fn ok(&self) -> bool {
        self.failures.is_empty()
    }
}

pub fn quadrangle_checks(pg: &PauliGraph) -> Result<QuadrangleReport> {
    if pg.n != 2 {
        return Err(Error::InvalidArgument(
            "quadrangle checks need the two-qubit graph".into(),
        ));
    }
    let g = &pg.graph;
    let mut failures = Vec::new();
    let mut check = |ok: bool, msg: String| {
        if !ok {
            failures.push(msg);
        }
    };
    let lines = g.maximal_cliques();
    check(
        lines.len() == 15,
        format!("expected 15 lines, found {}", lines.len()),
    );
    let sizes: Vec<usize> = lines.iter().map(Vec::len).collect();
    check(
        sizes.iter().all(|&s| s == 3),
        format!("line sizes {sizes:?}, expected all 3"),
    );
    for v in 0..g.len() {
        let k = lines.iter().filter(|l| l.contains(&v)).count();
        check(
            k == 3,
            format!("{} lies on {k} lines, expected 3", pg.labels[v]),
        );
    }
    let ovoid = g.max_independent_set();
    check(
        ovoid.len() == 5,
        format!(
            "maximum independent set has size {}, expected 5",
            ovoid.len()
        ),
    );
    let rest: Vec<usize> = (0..g.len()).filter(|v| !ovoid.contains(v)).collect();
    let petersen_map = g.induced(&rest).isomorphism_to(&SimpleGraph::petersen());
    check(
        petersen_map.is_some(),
        "complement of the independent set is not the Petersen graph".into(),
    );
    let automorphisms = g.automorphism_count();
    check(
        automorphisms == 720,
        format!("{automorphisms} graph automorphisms, expected 720"),
    );
    Ok(QuadrangleReport {
        lines,
        ovoid,
        petersen_map,
        automorphisms,
        failures,
    })
}

/// `|Aut(gᵢ)|`, or why it was not computed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AutOrder {
    Known(u128),
    Inconclusive(String),
}

#[derive(Clone, Debug)]
pub struct ChainStep {
    /// Number of operators generating this group.
    pub k: usize,
    pub group: MatrixGroup,
    pub aut: AutOrder,
}

/// Groups `gₖ = ⟨m₁, …, mₖ⟩` for `k ≥ 2`, where `m₁, m₂, …` are the operators
/// of the maximum independent set of the Pauli graph, taken as plain tensor
/// products of `σₓ, σ_y, σ_z` (the phase representatives generate different groups).
pub fn mub_chain(n: usize, limits: &Limits, tier: AutTier) -> Result<Vec<ChainStep>> {
    if !(2..=3).contains(&n) {
        return Err(Error::InvalidArgument(format!(
            "MUB chain needs n ∈ {{2, 3}}, got {n}"
        )));
    }
    let pg = PauliGraph::new(n)?;
    let ms: Vec<UnitaryMatrix> = pg
        .graph
        .max_independent_set()
        .into_iter()
        .map(|v| pg.operators[v].clone())
        .collect();
    let mut out = Vec::new();
    for k in 2..=ms.len() {
        let gens = &ms[..k];
        let group = closure(gens, limits.closure_budget)?;
        let aut = match chain_aut(gens, limits, tier) {
            Ok(o) => AutOrder::Known(o),
            Err(e) if e.is_inconclusive() => AutOrder::Inconclusive(e.to_string()),
            Err(e) => return Err(e),
        };
        out.push(ChainStep { k, group, aut });
    }
    Ok(out)
}

fn chain_aut(gens: &[UnitaryMatrix], limits: &Limits, tier: AutTier) -> Result<u128> {
    let act = VectorAction::new(gens, limits.enumeration)?;
    let pg = act.perm_group(gens)?;
    Ok(automorphism_group(&pg, limits, tier)?.order)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn labels_and_reps() {
        let g = PauliGraph::new(2).unwrap();
        assert_eq!(g.labels.len(), 15);
        assert_eq!(g.labels[0], "IZ");
        assert_eq!(g.labels[14], "YY");
        let cat = GateCatalog::new();
        let xx = cat.pauli_word("XX").unwrap();
        let r = phase_representative(&xx);
        assert_eq!(phase_representative(&r.scale(&Cyclotomic::i())), r);
    }

    #[test]
    fn one_qubit_graph_has_no_edges() {
        let g = PauliGraph::new(1).unwrap();
        assert_eq!(g.graph.len(), 3);
        assert_eq!(g.graph.edge_count(), 0);
    }

    #[test]
    fn matrix_and_symplectic_commutation_agree() {
        for n in 1..=3 {
            let g = PauliGraph::new(n).unwrap();
            for a in 0..g.graph.len() {
                for b in 0..g.graph.len() {
                    if a != b {
                        assert_eq!(
                            g.graph.has_edge(a, b),
                            g.symplectic_commute(g.symplectic[a], g.symplectic[b])
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn two_qubit_geometry() {
        let g = PauliGraph::new(2).unwrap();
        assert!((0..15).all(|v| g.graph.degree(v) == 6));
        let r = quadrangle_checks(&g).unwrap();
        assert!(r.ok(), "{:?}", r.failures);
    }

    #[test]
    fn dot_export() {
        let d = PauliGraph::new(1).unwrap().to_dot();
        assert!(d.starts_with("graph pauli1 {") && d.contains("label=\"Y\""));
    }
}
