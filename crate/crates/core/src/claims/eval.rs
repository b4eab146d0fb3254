use std::collections::HashMap;
use std::fmt;

use num_bigint::BigUint;

use super::recipe::Term;
use crate::error::{Error, Result};
use crate::limits::Limits;
use crate::matgrp::{UnitaryMatrix, VectorAction};
use crate::permgrp::{abelian_invariants, coset_action, normal_subgroups, PermGroup};
use crate::quantum::{
    clifford_order_formula, named_generators, quadrangle_checks, yang_baxter_check, GateCatalog,
    PauliGraph, SimpleGraph,
};
use crate::structlab::{
    automorphism_group, commutator_set, find_complement, isomorphic, AutTier, Complement,
};

/// Result of evaluating a recipe.
#[derive(Clone, Debug)]
pub enum Value {
    Int(BigUint),
    Bool(bool),
    List(Vec<u128>),
    Set(Vec<u128>),
    Text(String),
    Group(Group),
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |v: &[u128]| v.iter().map(u128::to_string).collect::<Vec<_>>().join(",");
        match self {
            Value::Int(n) => write!(f, "{n}"),
            Value::Bool(b) => write!(f, "{b}"),
            Value::List(v) => write!(f, "[{}]", join(v)),
            Value::Set(v) => write!(f, "{{{}}}", join(v)),
            Value::Text(s) => write!(f, "{s}"),
            Value::Group(g) => write!(f, "group {}", g.key),
        }
    }
}

/// A group value: gate groups stay as matrices until a permutation form is needed.
#[derive(Clone, Debug)]
pub struct Group {
    key: String,
    kind: GroupKind,
}

#[derive(Clone, Debug)]
enum GroupKind {
    Gates(Vec<UnitaryMatrix>),
    Perm(PermGroup),
}

fn int(n: impl Into<BigUint>) -> Value {
    Value::Int(n.into())
}

fn bad(msg: impl Into<String>) -> Error {
    Error::InvalidArgument(msg.into())
}

/// Evaluates recipes, caching permutation forms of gate groups.
pub struct Evaluator {
    limits: Limits,
    tier: AutTier,
    perm_cache: HashMap<String, PermGroup>,
    graphs: HashMap<usize, PauliGraph>,
}

impl Evaluator {
    pub fn new(limits: Limits) -> Self {
        Evaluator {
            limits,
            tier: AutTier::Required,
            perm_cache: HashMap::new(),
            graphs: HashMap::new(),
        }
    }

    pub fn set_tier(&mut self, tier: AutTier) {
        self.tier = tier;
    }

    pub fn eval(&mut self, t: &Term) -> Result<Value> {
        match t {
            Term::Int(n) => Ok(int(*n)),
            Term::Spec(s) => Ok(Value::Group(Group {
                key: t.to_string(),
                kind: GroupKind::Perm(s.construct()?),
            })),
            Term::Name(name) => self.named_group(name).map(Value::Group),
            Term::Call(head, args) => self.call(head, args, t),
        }
    }

    fn named_group(&self, name: &str) -> Result<Group> {
        let gens = named_generators(name)?;
        Ok(Group {
            key: name.to_string(),
            kind: GroupKind::Gates(gens),
        })
    }

    fn group(&mut self, t: &Term) -> Result<Group> {
        match self.eval(t)? {
            Value::Group(g) => Ok(g),
            v => Err(bad(format!("{t} is {v}, not a group"))),
        }
    }

    fn small_int(&mut self, t: &Term) -> Result<usize> {
        match t {
            Term::Int(n) => Ok(*n as usize),
            _ => Err(bad(format!("{t} is not an integer literal"))),
        }
    }

    fn perm(&mut self, g: &Group) -> Result<PermGroup> {
        match &g.kind {
            GroupKind::Perm(p) => Ok(p.clone()),
            GroupKind::Gates(gens) => {
                if let Some(p) = self.perm_cache.get(&g.key) {
                    return Ok(p.clone());
                }
                let act = VectorAction::new(gens, self.limits.enumeration)?;
                let p = act.perm_group(gens)?;
                self.perm_cache.insert(g.key.clone(), p.clone());
                Ok(p)
            }
        }
    }

    /// Both groups as permutation groups on the same points, `b` as a subgroup of `a`.
    fn pair(&mut self, a: &Group, b: &Group) -> Result<(PermGroup, PermGroup)> {
        match (&a.kind, &b.kind) {
            (GroupKind::Gates(ga), GroupKind::Gates(gb)) => {
                let act = VectorAction::new(ga, self.limits.enumeration)?;
                let pa = self.perm(a)?;
                let sub = gb
                    .iter()
                    .map(|m| act.perm_of(m))
                    .collect::<Result<Vec<_>>>()
                    .map_err(|_| bad(format!("{} is not inside {}", b.key, a.key)))?;
                let pb = pa.subgroup(sub)?;
                if !pb.is_subgroup_of(&pa) {
                    return Err(bad(format!("{} is not inside {}", b.key, a.key)));
                }
                Ok((pa, pb))
            }
            // Groups derived from a gate group act on that group's points.
            (_, GroupKind::Perm(pb)) => {
                let pa = self.perm(a)?;
                if pa.degree() != pb.degree() || !pb.is_subgroup_of(&pa) {
                    return Err(bad(format!("{} is not a subgroup of {}", b.key, a.key)));
                }
                Ok((pa, pb.clone()))
            }
            _ => Err(bad(format!(
                "{} and {} live in different representations",
                a.key, b.key
            ))),
        }
    }

    fn perm_value(&mut self, key: String, p: PermGroup) -> Value {
        Value::Group(Group {
            key,
            kind: GroupKind::Perm(p),
        })
    }

    fn matrix(&self, t: &Term) -> Result<UnitaryMatrix> {
        let cat = GateCatalog::new();
        match t {
            Term::Name(n) => cat
                .get(n)
                .cloned()
                .ok_or_else(|| bad(format!("unknown gate {n:?}"))),
            Term::Call(h, args) if h == "kron" && !args.is_empty() => {
                let mut acc = self.matrix(&args[0])?;
                for a in &args[1..] {
                    acc = acc.kron(&self.matrix(a)?);
                }
                Ok(acc)
            }
            _ => Err(bad(format!("{t} is not a gate expression"))),
        }
    }

    fn graph(&mut self, n: usize) -> Result<&PauliGraph> {
        if let std::collections::hash_map::Entry::Vacant(e) = self.graphs.entry(n) {
            e.insert(PauliGraph::new(n)?);
        }
        Ok(&self.graphs[&n])
    }

    fn call(&mut self, head: &str, args: &[Term], whole: &Term) -> Result<Value> {
        let arity = |k: usize| -> Result<()> {
            if args.len() == k {
                Ok(())
            } else {
                Err(bad(format!(
                    "{head} takes {k} argument(s), got {}",
                    args.len()
                )))
            }
        };
        let key = whole.to_string();
        match head {
            "order" => {
                arity(1)?;
                let g = self.group(&args[0])?;
                Ok(int(self.perm(&g)?.order()))
            }
            "center" => {
                arity(1)?;
                let g = self.group(&args[0])?;
                let z = self.perm(&g)?.center(self.limits.enumeration)?;
                Ok(self.perm_value(key, z))
            }
            "derived" => {
                arity(1)?;
                let g = self.group(&args[0])?;
                let d = self.perm(&g)?.derived_subgroup();
                Ok(self.perm_value(key, d))
            }
            "central_quotient" => {
                arity(1)?;
                let g = self.group(&args[0])?;
                let p = self.perm(&g)?;
                let z = p.center(self.limits.enumeration)?;
                let q = coset_action(&p, &z, &self.limits)?.into_image();
                Ok(self.perm_value(key, q))
            }
            "quotient" => {
                arity(2)?;
                let (a, b) = (self.group(&args[0])?, self.group(&args[1])?);
                let (pa, pb) = self.pair(&a, &b)?;
                let q = coset_action(&pa, &pb, &self.limits)?.into_image();
                Ok(self.perm_value(key, q))
            }
            "aut" => {
                arity(1)?;
                let g = self.group(&args[0])?;
                let a = automorphism_group(&self.perm(&g)?, &self.limits, self.tier)?;
                Ok(self.perm_value(key, a.group))
            }
            "chain" => {
                arity(2)?;
                let n = self.small_int(&args[0])?;
                let k = self.small_int(&args[1])?;
                let pg = self.graph(n)?;
                let mis = pg.graph.max_independent_set();
                if k == 0 || k > mis.len() {
                    return Err(bad(format!(
                        "chain({n}, {k}): the independent set has {} operators",
                        mis.len()
                    )));
                }
                let gens = mis[..k].iter().map(|&v| pg.operators[v].clone()).collect();
                Ok(Value::Group(Group {
                    key,
                    kind: GroupKind::Gates(gens),
                }))
            }
            "index" => {
                arity(2)?;
                let (a, b) = (self.group(&args[0])?, self.group(&args[1])?);
                let (pa, pb) = self.pair(&a, &b)?;
                Ok(int(pa.order() / pb.order()))
            }
            "subgroup" | "normal" => {
                arity(2)?;
                let (h, g) = (self.group(&args[0])?, self.group(&args[1])?);
                Ok(Value::Bool(match self.pair(&g, &h) {
                    Ok((pg, ph)) => head == "subgroup" || ph.is_normal_in(&pg),
                    Err(Error::InvalidArgument(_)) => false,
                    Err(e) => return Err(e),
                }))
            }
            "equal" => {
                arity(2)?;
                let (a, b) = (self.group(&args[0])?, self.group(&args[1])?);
                Ok(Value::Bool(match self.pair(&a, &b) {
                    Ok((pa, pb)) => pa.order() == pb.order(),
                    Err(Error::InvalidArgument(_)) => false,
                    Err(e) => return Err(e),
                }))
            }
            "abelian_invariants" => {
                arity(1)?;
                let g = self.group(&args[0])?;
                let inv = abelian_invariants(&self.perm(&g)?, &self.limits)?;
                Ok(Value::List(inv.into_iter().map(u128::from).collect()))
            }
            "normal_orders" => {
                arity(1)?;
                let g = self.group(&args[0])?;
                let ns = normal_subgroups(&self.perm(&g)?, &self.limits)?;
                let mut v: Vec<u128> = ns
                    .iter()
                    .filter(|n| n.is_proper_nontrivial())
                    .map(|n| n.order)
                    .collect();
                v.sort();
                v.dedup();
                Ok(Value::Set(v))
            }
            "perfect" | "abelian" => {
                arity(1)?;
                let g = self.group(&args[0])?;
                let p = self.perm(&g)?;
                Ok(Value::Bool(if head == "perfect" {
                    p.is_perfect()
                } else {
                    p.is_abelian()
                }))
            }
            "iso" => {
                arity(2)?;
                let (a, b) = (self.group(&args[0])?, self.group(&args[1])?);
                let (pa, pb) = (self.perm(&a)?, self.perm(&b)?);
                Ok(Value::Bool(isomorphic(&pa, &pb, &self.limits)?.isomorphic))
            }
            "complement" => {
                arity(2)?;
                let (a, b) = (self.group(&args[0])?, self.group(&args[1])?);
                let (pa, pb) = self.pair(&a, &b)?;
                match find_complement(&pa, &pb, &self.limits)? {
                    Complement::Found(h) => Ok(int(h.order())),
                    Complement::NotFound { exhaustive: true } => Ok(Value::Text("none".into())),
                    Complement::NotFound { exhaustive: false } => Err(Error::BudgetExhausted(
                        "complement search ran out of nodes".into(),
                    )),
                }
            }
            "commutator_set_size" | "commutator_deficiency" | "has_noncommutators" => {
                arity(1)?;
                let g = self.group(&args[0])?;
                let r = commutator_set(&self.perm(&g)?, &self.limits)?;
                Ok(match head {
                    "commutator_set_size" => int(r.set_size),
                    "commutator_deficiency" => int(r.deficiency()),
                    _ => Value::Bool(r.deficiency() > 0),
                })
            }
            "aut_order" | "inn_order" | "out_order" => {
                arity(1)?;
                let g = self.group(&args[0])?;
                let a = automorphism_group(&self.perm(&g)?, &self.limits, self.tier)?;
                Ok(int(match head {
                    "aut_order" => a.order,
                    "inn_order" => a.inner_order,
                    _ => a.outer_order(),
                }))
            }
            "formula" => {
                arity(1)?;
                let n = self.small_int(&args[0])?;
                Ok(Value::Int(clifford_order_formula(n as u32)?))
            }
            "yang_baxter" => {
                arity(1)?;
                Ok(Value::Bool(yang_baxter_check(&self.matrix(&args[0])?)?))
            }
            "vertices"
            | "degrees"
            | "lines"
            | "line_sizes"
            | "lines_per_point"
            | "mis_size"
            | "graph_automorphisms"
            | "petersen_complement"
            | "quadrangle" => {
                arity(1)?;
                let n = self.small_int(&args[0])?;
                let pg = self.graph(n)?;
                let g = &pg.graph;
                let set = |it: &mut dyn Iterator<Item = usize>| {
                    let mut v: Vec<u128> = it.map(|x| x as u128).collect();
                    v.sort();
                    v.dedup();
                    Value::Set(v)
                };
                Ok(match head {
                    "vertices" => int(g.len() as u64),
                    "degrees" => set(&mut (0..g.len()).map(|v| g.degree(v))),
                    "lines" => int(g.maximal_cliques().len() as u64),
                    "line_sizes" => set(&mut g.maximal_cliques().iter().map(Vec::len)),
                    "lines_per_point" => {
                        let lines = g.maximal_cliques();
                        set(&mut (0..g.len())
                            .map(|v| lines.iter().filter(|l| l.contains(&v)).count()))
                    }
                    "mis_size" => int(g.max_independent_set().len() as u64),
                    "graph_automorphisms" => int(g.automorphism_count()),
                    "petersen_complement" => {
                        let mis = g.max_independent_set();
                        let rest: Vec<usize> = (0..g.len()).filter(|v| !mis.contains(v)).collect();
                        Value::Bool(
                            g.induced(&rest)
                                .isomorphism_to(&SimpleGraph::petersen())
                                .is_some(),
                        )
                    }
                    _ => Value::Bool(quadrangle_checks(pg)?.ok()),
                })
            }
            _ => Err(bad(format!("unknown recipe function {head:?}"))),
        }
    }
}
