//! Bound evaluators.
//!
//! Every evaluator returns a [`BoundReport`]: the bound's exact rational
//! value, an applicability flag, and structured witness data. The central
//! contract is that an *applicable* lower bound never exceeds the certified
//! optimum and an applicable upper bound never falls below it; campaigns
//! verify exactly that. Values are exact rationals, never floats.

use num_rational::Ratio;
use num_traits::Signed;
use serde::ser::SerializeMap;
use serde::{Serialize, Serializer};
use serde_json::{json, Value};

use crate::coloring::gfree_chromatic_number;
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::pattern::PatternSpec;
use crate::profile::neighbor_profile;
use crate::solver::{SolveResult, SolverConfig};

pub type Rational = Ratio<i64>;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum BoundKind {
    Lower,
    Upper,
}

/// One evaluated bound.
#[derive(Clone, Debug)]
pub struct BoundReport {
    pub name: String,
    pub kind: BoundKind,
    /// Exact value; `None` exactly when the bound is inapplicable.
    pub value: Option<Rational>,
    pub applicable: bool,
    /// True when the value is a function of the certified optimum (it then
    /// verifies the inequality a posteriori rather than predicting).
    pub depends_on_optimum: bool,
    pub witness: Value,
}

impl BoundReport {
    fn applicable(
        name: &str,
        kind: BoundKind,
        value: Rational,
        depends_on_optimum: bool,
        witness: Value,
    ) -> Self {
        BoundReport {
            name: name.into(),
            kind,
            value: Some(value),
            applicable: true,
            depends_on_optimum,
            witness,
        }
    }

    fn inapplicable(name: &str, kind: BoundKind, depends_on_optimum: bool, witness: Value) -> Self {
        BoundReport {
            name: name.into(),
            kind,
            value: None,
            applicable: false,
            depends_on_optimum,
            witness,
        }
    }

    /// The implied integer bound: the optimum is an integer, so a lower
    /// bound rounds up and an upper bound rounds down.
    pub fn value_int(&self) -> Option<i64> {
        self.value.map(|v| match self.kind {
            BoundKind::Lower => v.ceil().to_integer(),
            BoundKind::Upper => v.floor().to_integer(),
        })
    }

    /// Does this report contradict the given certified optimum?
    pub fn violates(&self, optimum: usize) -> bool {
        match (self.applicable, self.value) {
            (true, Some(v)) => {
                let opt = Rational::from_integer(optimum as i64);
                match self.kind {
                    BoundKind::Lower => v > opt,
                    BoundKind::Upper => v < opt,
                }
            }
            _ => false,
        }
    }

    /// Signed gap to the optimum: how much slack the bound leaves
    /// (negative exactly when the bound is violated).
    pub fn gap(&self, optimum: usize) -> Option<Rational> {
        let v = self.value?;
        let opt = Rational::from_integer(optimum as i64);
        Some(match self.kind {
            BoundKind::Lower => opt - v,
            BoundKind::Upper => v - opt,
        })
    }
}

impl Serialize for BoundReport {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut map = serializer.serialize_map(Some(7))?;
        map.serialize_entry("name", &self.name)?;
        map.serialize_entry("kind", &self.kind)?;
        map.serialize_entry("value_num", &self.value.map(|v| *v.numer()))?;
        map.serialize_entry("value_den", &self.value.map(|v| *v.denom()))?;
        map.serialize_entry("value_int", &self.value_int())?;
        map.serialize_entry("applicable", &self.applicable)?;
        map.serialize_entry("depends_on_optimum", &self.depends_on_optimum)?;
        map.serialize_entry("witness", &self.witness)?;
        map.end()
    }
}

pub(crate) fn set_json(s: VertexSet) -> Value {
    Value::Array(s.iter().map(|v| json!(v)).collect())
}

pub(crate) fn sets_json(sets: &[VertexSet]) -> Value {
    Value::Array(sets.iter().map(|s| set_json(*s)).collect())
}

fn ratio_json(v: Rational) -> Value {
    json!({ "num": *v.numer(), "den": *v.denom() })
}

/// Upper bound n - e/Delta on the independence number (Kwok).
pub fn kwok_upper(g: &Graph) -> BoundReport {
    let stats = g.degree_stats();
    let (n, e, delta_max) = (g.n() as i64, g.edge_count() as i64, stats.max_degree as i64);
    if delta_max == 0 {
        return BoundReport::inapplicable(
            "kwok",
            BoundKind::Upper,
            false,
            json!({ "note": "edgeless graph: every vertex is independent, alpha = n", "n": n }),
        );
    }
    let value = Rational::from_integer(n) - Rational::new(e, delta_max);
    BoundReport::applicable(
        "kwok",
        BoundKind::Upper,
        value,
        false,
        json!({ "max_degree": delta_max, "edge_count": e }),
    )
}

/// Upper bound n - ceil((n-1)/Delta) on the independence number (Borg).
///
/// The inequality needs a connected graph: K2 plus an isolated vertex has
/// alpha = 2 but the formula gives 1. Disconnected inputs are reported as
/// inapplicable rather than asserting a false bound.
pub fn borg_upper(g: &Graph) -> BoundReport {
    let stats = g.degree_stats();
    let (n, delta_max) = (g.n() as i64, stats.max_degree as i64);
    if delta_max == 0 {
        return BoundReport::inapplicable(
            "borg",
            BoundKind::Upper,
            false,
            json!({ "note": "edgeless graph: every vertex is independent, alpha = n", "n": n }),
        );
    }
    if !g.is_connected() {
        let parts = g.components_within(g.vertices()).len();
        return BoundReport::inapplicable(
            "borg",
            BoundKind::Upper,
            false,
            json!({
                "note": "bound requires a connected graph",
                "components": parts,
            }),
        );
    }
    let ceil_term = (n - 1 + delta_max - 1) / delta_max;
    BoundReport::applicable(
        "borg",
        BoundKind::Upper,
        Rational::from_integer(n - ceil_term),
        false,
        json!({ "max_degree": delta_max, "ceil_term": ceil_term }),
    )
}

/// The smallest integer p such that every clique K contains a vertex v with
/// deg(v) <= p - |K| - 1, together with a certifying vertex per maximal
/// clique. Evaluated over maximal cliques; subsets are covered because the
/// hardest size-s subclique of a maximal clique is its s highest-degree
/// vertices.
pub fn henning_minimal_p(g: &Graph) -> (i64, Vec<(VertexSet, usize)>) {
    let cliques = crate::cliques::maximal_cliques(g, g.vertices());
    let mut p = 1i64;
    let mut certificates = Vec::with_capacity(cliques.len());
    for m in &cliques {
        let mut degs: Vec<i64> = m.iter().map(|v| g.degree(v) as i64).collect();
        degs.sort_unstable_by(|a, b| b.cmp(a));
        for (i, d) in degs.iter().enumerate() {
            p = p.max(d + i as i64 + 2); // subset size i+1
        }
        let min_deg = m.iter().map(|v| g.degree(v)).min().unwrap();
        let witness_vertex = m.iter().find(|&v| g.degree(v) == min_deg).unwrap();
        certificates.push((*m, witness_vertex));
    }
    (p, certificates)
}

/// Lower bound 2n/p on the independence number (Henning), using the minimal
/// p for which the clique-degree condition holds.
pub fn henning_lower(g: &Graph) -> BoundReport {
    let n = g.n() as i64;
    if n == 0 {
        return BoundReport::inapplicable(
            "henning",
            BoundKind::Lower,
            false,
            json!({ "note": "empty graph" }),
        );
    }
    let (p, certificates) = henning_minimal_p(g);
    let value = Rational::new(2 * n, p);
    let cert_json: Vec<Value> = certificates
        .iter()
        .map(|(clique, v)| {
            json!({
                "clique": set_json(*clique),
                "vertex": v,
                "degree": g.degree(*v),
            })
        })
        .collect();
    BoundReport::applicable(
        "henning",
        BoundKind::Lower,
        value,
        false,
        json!({ "p": p, "certificates": cert_json }),
    )
}

/// Lower bound n / chi on the maximum free subset size, where chi is the
/// pattern-free chromatic number: some class of an optimal partition has at
/// least n/chi vertices and every class is free.
pub fn chi_lower(g: &Graph, p: &PatternSpec, cfg: &SolverConfig) -> Result<BoundReport> {
    let (chi, classes) = gfree_chromatic_number(g, p, cfg)?;
    if chi == 0 {
        return Ok(BoundReport::inapplicable(
            "chi_ratio",
            BoundKind::Lower,
            false,
            json!({ "note": "empty graph" }),
        ));
    }
    let value = Rational::new(g.n() as i64, chi as i64);
    Ok(BoundReport::applicable(
        "chi_ratio",
        BoundKind::Lower,
        value,
        false,
        json!({ "chi": chi, "classes": sets_json(&classes) }),
    ))
}

/// Lower bound n + (e_G + e_H' - e_H - Delta)/delta on the maximum free
/// subset, where e_H' counts the edges outside the optimum.
///
/// Returns the a-posteriori report (e_H' read off the certified optimum)
/// and an a-priori weakening with e_H' = 0. The derivation counts edges
/// forced by maximality, so when the host is already pattern-free (the
/// optimum is everything) there is nothing to count and both reports are
/// inapplicable; on edge-starved free hosts the raw formula can exceed n.
pub fn edge_count_lower(
    g: &Graph,
    p: &PatternSpec,
    s_opt: &SolveResult,
) -> Result<(BoundReport, BoundReport)> {
    let Some(pat) = p.as_single() else {
        return Err(Error::Pattern(
            "edge-count bound needs a single-graph pattern".into(),
        ));
    };
    let delta = p.min_degree() as i64;
    if delta == 0 {
        return Err(Error::Pattern(
            "edge-count bound needs a pattern with minimum degree at least 1".into(),
        ));
    }
    let n = g.n() as i64;
    let e_h = g.edge_count() as i64;
    let e_g = pat.edge_count() as i64;
    let delta_max = g.degree_stats().max_degree as i64;
    let outside = g.vertices().difference(s_opt.best);
    let e_prime = g.edges_within(outside) as i64;

    let value_for = |e_prime: i64| {
        Rational::from_integer(n) + Rational::new(e_g + e_prime - e_h - delta_max, delta)
    };

    if s_opt.size == g.n() {
        let note = "host is pattern-free: the maximality argument is vacuous \
                    and the raw formula carries no guarantee";
        let posterior = BoundReport::inapplicable(
            "edge_count",
            BoundKind::Lower,
            true,
            json!({ "note": note, "raw_value": ratio_json(value_for(0)) }),
        );
        let apriori = BoundReport::inapplicable(
            "edge_count_apriori",
            BoundKind::Lower,
            false,
            json!({ "note": note, "raw_value": ratio_json(value_for(0)) }),
        );
        return Ok((posterior, apriori));
    }

    let posterior = BoundReport::applicable(
        "edge_count",
        BoundKind::Lower,
        value_for(e_prime),
        true,
        json!({
            "pattern_edges": e_g,
            "host_edges": e_h,
            "outside_edges": e_prime,
            "max_degree": delta_max,
            "pattern_min_degree": delta,
        }),
    );
    let apriori = BoundReport::applicable(
        "edge_count_apriori",
        BoundKind::Lower,
        value_for(0),
        false,
        json!({
            "pattern_edges": e_g,
            "host_edges": e_h,
            "outside_edges_assumed": 0,
            "max_degree": delta_max,
            "pattern_min_degree": delta,
        }),
    );
    Ok((posterior, apriori))
}

/// Sandwich n - beta/delta <= m <= n - beta/Delta from the neighbor profile
/// of the certified optimum.
///
/// Every vertex outside a maximum free set has at least delta(G) neighbors
/// inside (otherwise it could be added); the evaluator checks that and
/// refuses sets that fail it, since they cannot be maximal.
pub fn profile_sandwich(
    g: &Graph,
    p: &PatternSpec,
    s_opt: &SolveResult,
) -> Result<(BoundReport, BoundReport)> {
    if p.as_single().is_none() {
        return Err(Error::Pattern(
            "profile sandwich needs a single-graph pattern".into(),
        ));
    }
    let delta = p.min_degree() as i64;
    if delta == 0 {
        return Err(Error::Pattern(
            "profile sandwich needs a pattern with minimum degree at least 1".into(),
        ));
    }
    let profile = neighbor_profile(g, s_opt.best);
    if let Some(min_attach) = profile.min_attachment() {
        if (min_attach as i64) < delta {
            return Err(Error::InvariantViolation(format!(
                "an outside vertex has only {min_attach} neighbors in the solution \
                 (pattern minimum degree {delta}); the set cannot be maximal"
            )));
        }
    }
    let n = g.n() as i64;
    let beta = profile.beta as i64;
    let delta_max = g.degree_stats().max_degree as i64;
    let witness = json!({
        "profile": { "counts": profile.counts, "beta": beta },
        "pattern_min_degree": delta,
        "max_degree": delta_max,
    });
    if delta_max == 0 {
        let note = json!({ "note": "edgeless graph: the upper form divides by the maximum degree" });
        return Ok((
            BoundReport::inapplicable("profile_lower", BoundKind::Lower, true, note.clone()),
            BoundReport::inapplicable("profile_upper", BoundKind::Upper, true, note),
        ));
    }
    let lower = Rational::from_integer(n) - Rational::new(beta, delta);
    let upper = Rational::from_integer(n) - Rational::new(beta, delta_max);
    Ok((
        BoundReport::applicable("profile_lower", BoundKind::Lower, lower, true, witness.clone()),
        BoundReport::applicable("profile_upper", BoundKind::Upper, upper, true, witness),
    ))
}

/// Render a rational for humans: integer when exact, `num/den` otherwise.
pub fn format_rational(v: Rational) -> String {
    if v.is_integer() {
        format!("{}", v.to_integer())
    } else {
        format!("{}/{}", v.numer(), v.denom())
    }
}

/// True when the rational is negative; exposed for gap statistics.
pub fn is_negative(v: Rational) -> bool {
    v.is_negative()
}
