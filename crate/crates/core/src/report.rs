//! Serializable reports. Polynomials are strings in `t1`, `t2` with terms in
//! graded-lex order; tuples over fixed points are maps from point id to the
//! nonzero values. The JSON layout is published as [`REPORT_SCHEMA`].

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::charpoly::{fmt_rational, PointTuple, SPoly};
use crate::chowring::{CongruenceSystem, EquivariantModel, GeneratorSet, GradedRingPresentation};
use crate::fixedloci::{Factor, FactorKind, FixedComponent, FixedPointSet};
use crate::hilb3p2::Verification;
use crate::staircases::Locus;
use crate::toricfan::{Fan, Subtorus};

/// JSON schema every [`Report`] validates against.
pub const REPORT_SCHEMA: &str = include_str!("../schema/report.schema.json");

pub type PolyMap = BTreeMap<String, String>;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Report {
    pub fan: FanEntry,
    pub d: u32,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub fixed_points: Option<Vec<FixedPointEntry>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub subtori: Option<Vec<SubtorusEntry>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub betti: Option<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub equivariant_basis: Option<Vec<GradedSliceEntry>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub chow: Option<ChowEntry>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub verification: Option<VerificationEntry>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FanEntry {
    pub name: String,
    pub rays: Vec<[i64; 2]>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FixedPointEntry {
    pub id: String,
    /// Column heights of the staircase at each chart.
    pub staircases: Vec<Vec<u32>>,
    /// Tangent characters `(c1, c2)`.
    pub tangent: Vec<[i64; 2]>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SubtorusEntry {
    pub cocharacter: [i64; 2],
    /// Charts whose fixed point is isolated in `X^{T'}`.
    pub pfix: Vec<usize>,
    /// Fixed lines as pairs of chart indices.
    pub lfix: Vec<[usize; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub components: Option<Vec<ComponentEntry>>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ComponentEntry {
    pub points: Vec<String>,
    pub dimension: u32,
    pub factors: Vec<FactorEntry>,
    pub euler: PolyMap,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub generators: Option<Vec<GeneratorEntry>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub relations: Option<Vec<RelationEntry>>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FactorEntry {
    pub kind: String,
    pub description: String,
    pub dimension: u32,
    pub points: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GeneratorEntry {
    pub degree: u32,
    pub values: PolyMap,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RelationEntry {
    pub coefficients: PolyMap,
    pub modulus: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GradedSliceEntry {
    pub degree: u32,
    pub dim: usize,
    pub basis: Vec<PolyMap>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ChowEntry {
    pub cap: u32,
    /// `dim A^k` for `k <= cap`.
    pub dims: Vec<usize>,
    /// `dim A_T^k` for `k <= cap`.
    pub equivariant_dims: Vec<usize>,
    /// Lifts to `A_T^k` of the chosen basis of `A^k`.
    pub basis: Vec<Vec<PolyMap>>,
    pub structure_constants: Vec<StructureConstantEntry>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct StructureConstantEntry {
    /// `(degree, index)` of the left factor.
    pub left: [usize; 2],
    pub right: [usize; 2],
    pub coefficients: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct VerificationEntry {
    pub passed: bool,
    pub label_map: String,
    pub relevance: Vec<RelevanceEntry>,
    pub relations: Vec<FamilyEntry>,
    pub degrees: Vec<DegreeEntry>,
    pub seed: u64,
    pub samples: usize,
    pub sample_failures: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RelevanceEntry {
    pub point: String,
    pub passed: bool,
    pub expected: Vec<WeightDimension>,
    pub computed: Vec<WeightDimension>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct WeightDimension {
    pub cocharacter: [i64; 2],
    pub dimension: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FamilyEntry {
    pub number: usize,
    pub relation: String,
    pub passed: bool,
    /// `"σ=<perm> degree=<k> basis=<i>"` for each failing image and element.
    pub failures: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DegreeEntry {
    pub degree: u32,
    pub passed: bool,
    pub expected_dim: usize,
    pub module_dim: usize,
    pub relation_dim: usize,
    pub module_in_relations: bool,
    pub relations_in_module: bool,
}

fn tuple_map(set: &FixedPointSet, t: &PointTuple) -> PolyMap {
    t.iter()
        .enumerate()
        .filter(|(_, p)| !p.is_zero())
        .map(|(i, p)| (set.point(i).id().to_string(), p.to_string()))
        .collect()
}

fn local_map(set: &FixedPointSet, c: &FixedComponent, values: &[SPoly]) -> PolyMap {
    c.points
        .iter()
        .zip(values)
        .filter(|(_, p)| !p.is_zero())
        .map(|(&i, p)| (set.point(i).id().to_string(), p.to_string()))
        .collect()
}

fn factor_entry(f: &Factor) -> FactorEntry {
    let (kind, description) = match &f.kind {
        FactorKind::ReducedPoint { locus } => (
            "reduced_point",
            match locus {
                Locus::Point(i) => format!("point p{i}"),
                Locus::Line(l) => format!("no points on line p{}-p{}", l.first, l.second),
            },
        ),
        FactorKind::GradedHilb { chart, hilbert } => {
            let h: Vec<String> = hilbert.iter().map(|(w, n)| format!("{w}:{n}")).collect();
            (
                "graded_hilb",
                format!("chart {chart}, hilbert function {{{}}}", h.join(", ")),
            )
        }
        FactorKind::LineBlocks { line, pi, blocks } => {
            let b: Vec<String> = blocks.iter().map(|(l, m)| format!("{l}^{m}")).collect();
            (
                "line_blocks",
                format!(
                    "line p{}-p{}, pieces {pi}, blocks [{}]",
                    line.first,
                    line.second,
                    b.join(", ")
                ),
            )
        }
    };
    FactorEntry {
        kind: kind.to_string(),
        description,
        dimension: f.dimension,
        points: f.num_points,
    }
}

/// How much of each component a subtorus section carries.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Detail {
    Shape,
    Components,
    Relations,
}

impl Report {
    pub fn new(fan: &Fan, d: u32) -> Report {
        Report {
            fan: FanEntry {
                name: fan.name().to_string(),
                rays: fan.rays().iter().map(|&(a, b)| [a, b]).collect(),
            },
            d,
            fixed_points: None,
            subtori: None,
            betti: None,
            equivariant_basis: None,
            chow: None,
            verification: None,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize")
    }
}

pub fn fixed_points_section(set: &FixedPointSet) -> Vec<FixedPointEntry> {
    (0..set.len())
        .map(|i| {
            let z = set.point(i);
            FixedPointEntry {
                id: z.id().to_string(),
                staircases: z
                    .stairs()
                    .iter()
                    .map(|s| s.heights().parts().to_vec())
                    .collect(),
                tangent: set.tangent(i).iter().map(|c| [c.c1, c.c2]).collect(),
            }
        })
        .collect()
}

pub fn component_entry(
    set: &FixedPointSet,
    c: &FixedComponent,
    generators: Option<&GeneratorSet>,
    relations: Option<&CongruenceSystem>,
) -> ComponentEntry {
    ComponentEntry {
        points: c
            .points
            .iter()
            .map(|&i| set.point(i).id().to_string())
            .collect(),
        dimension: c.dimension,
        factors: c.factors.iter().map(factor_entry).collect(),
        euler: local_map(set, c, &c.euler),
        generators: generators.map(|g| {
            g.generators
                .iter()
                .map(|g| GeneratorEntry {
                    degree: g.degree,
                    values: local_map(set, c, &g.values),
                })
                .collect()
        }),
        relations: relations.map(|sys| {
            sys.relations
                .iter()
                .map(|r| RelationEntry {
                    coefficients: r
                        .points
                        .iter()
                        .zip(&r.coefficients)
                        .filter(|(_, p)| !p.is_zero())
                        .map(|(&i, p)| (set.point(i).id().to_string(), p.to_string()))
                        .collect(),
                    modulus: r.modulus().to_string(),
                })
                .collect()
        }),
    }
}

pub fn subtorus_shape(fan: &Fan, w: Subtorus) -> SubtorusEntry {
    let shape = fan.classify_fixed_locus(w);
    SubtorusEntry {
        cocharacter: [w.w().0, w.w().1],
        pfix: shape.pfix,
        lfix: shape.lfix.iter().map(|l| [l.first, l.second]).collect(),
        components: None,
    }
}

/// Relevant subtori of the model with the requested level of detail.
pub fn subtori_section(model: &EquivariantModel, detail: Detail) -> Vec<SubtorusEntry> {
    let set = model.fixed_points();
    model
        .subtori()
        .iter()
        .map(|s| {
            let mut entry = subtorus_shape(model.fan(), s.subtorus);
            if detail >= Detail::Components {
                let full = detail == Detail::Relations;
                entry.components = Some(
                    s.components
                        .iter()
                        .enumerate()
                        .map(|(k, c)| {
                            component_entry(
                                set,
                                c,
                                full.then(|| &s.generators[k]),
                                full.then(|| &s.congruences[k]),
                            )
                        })
                        .collect(),
                );
            }
            entry
        })
        .collect()
}

pub fn graded_basis_section(model: &EquivariantModel, cap: u32) -> Vec<GradedSliceEntry> {
    (0..=cap)
        .map(|k| {
            let slice = model.equivariant_graded_basis(k);
            GradedSliceEntry {
                degree: k,
                dim: slice.dim(),
                basis: slice
                    .basis()
                    .iter()
                    .map(|t| tuple_map(model.fixed_points(), t))
                    .collect(),
            }
        })
        .collect()
}

pub fn chow_section(set: &FixedPointSet, ring: &GradedRingPresentation) -> ChowEntry {
    ChowEntry {
        cap: ring.cap,
        dims: ring.betti.clone(),
        equivariant_dims: ring.equivariant_dims.clone(),
        basis: ring
            .basis
            .iter()
            .map(|level| level.iter().map(|t| tuple_map(set, t)).collect())
            .collect(),
        structure_constants: ring
            .structure_constants
            .iter()
            .map(|s| StructureConstantEntry {
                left: [s.left.0 as usize, s.left.1],
                right: [s.right.0 as usize, s.right.1],
                coefficients: s.coefficients.iter().map(fmt_rational).collect(),
            })
            .collect(),
    }
}

pub fn verification_section(v: &Verification, seed: u64) -> VerificationEntry {
    let wd = |list: &[((i64, i64), usize)]| {
        list.iter()
            .map(|(w, n)| WeightDimension {
                cocharacter: [w.0, w.1],
                dimension: *n,
            })
            .collect()
    };
    VerificationEntry {
        passed: v.passed(),
        label_map: v.label_map.clone(),
        relevance: v
            .array
            .iter()
            .map(|a| RelevanceEntry {
                point: a.point.to_string(),
                passed: a.passed(),
                expected: wd(&a.expected),
                computed: wd(&a.computed),
            })
            .collect(),
        relations: v
            .families
            .iter()
            .map(|f| FamilyEntry {
                number: f.number,
                relation: f.text.clone(),
                passed: f.failures.is_empty(),
                failures: f
                    .failures
                    .iter()
                    .map(|(p, k, i)| {
                        format!(
                            "σ={} degree={k} basis={i}",
                            if p.is_empty() { "id" } else { p }
                        )
                    })
                    .collect(),
            })
            .collect(),
        degrees: v
            .degrees
            .iter()
            .map(|d| DegreeEntry {
                degree: d.degree,
                passed: d.passed(),
                expected_dim: d.expected_dim,
                module_dim: d.module_dim,
                relation_dim: d.relation_dim,
                module_in_relations: d.module_in_relations,
                relations_in_module: d.relations_in_module,
            })
            .collect(),
        seed,
        samples: v.samples,
        sample_failures: v.sample_failures,
    }
}

fn render_map(out: &mut String, indent: &str, m: &PolyMap) {
    for (k, v) in m {
        let _ = writeln!(out, "{indent}{k}: {v}");
    }
}

/// Human-readable rendering of the same data as the JSON form.
pub fn render_text(r: &Report) -> String {
    let mut out = String::new();
    let rays: Vec<String> = r
        .fan
        .rays
        .iter()
        .map(|[a, b]| format!("({a},{b})"))
        .collect();
    let _ = writeln!(
        out,
        "fan {} rays {} d = {}",
        r.fan.name,
        rays.join(" "),
        r.d
    );
    if let Some(points) = &r.fixed_points {
        let _ = writeln!(out, "fixed points: {}", points.len());
        for p in points {
            let t: Vec<String> = p
                .tangent
                .iter()
                .map(|[a, b]| format!("({a},{b})"))
                .collect();
            let _ = writeln!(out, "  {}  tangent {}", p.id, t.join(" "));
        }
    }
    if let Some(subtori) = &r.subtori {
        let _ = writeln!(out, "relevant subtori: {}", subtori.len());
        for s in subtori {
            let lines: Vec<String> = s.lfix.iter().map(|[a, b]| format!("p{a}-p{b}")).collect();
            let _ = writeln!(
                out,
                "  cocharacter ({},{})  isolated {:?}  lines [{}]",
                s.cocharacter[0],
                s.cocharacter[1],
                s.pfix,
                lines.join(", ")
            );
            for (k, c) in s.components.iter().flatten().enumerate() {
                let _ = writeln!(
                    out,
                    "    component {k}: dimension {}, {} points",
                    c.dimension,
                    c.points.len()
                );
                for f in &c.factors {
                    let _ = writeln!(
                        out,
                        "      factor {} (dim {}): {}",
                        f.kind, f.dimension, f.description
                    );
                }
                let _ = writeln!(out, "      euler classes:");
                render_map(&mut out, "        ", &c.euler);
                for (g, gen) in c.generators.iter().flatten().enumerate() {
                    let _ = writeln!(out, "      generator {g} (degree {}):", gen.degree);
                    render_map(&mut out, "        ", &gen.values);
                }
                for (i, rel) in c.relations.iter().flatten().enumerate() {
                    let _ = writeln!(out, "      relation {i} modulo {}:", rel.modulus);
                    render_map(&mut out, "        ", &rel.coefficients);
                }
            }
        }
    }
    if let Some(b) = &r.betti {
        let _ = writeln!(out, "betti numbers b_0, b_2, ...: {b:?}");
    }
    if let Some(slices) = &r.equivariant_basis {
        for s in slices {
            let _ = writeln!(out, "A_T^{}: dimension {}", s.degree, s.dim);
            for (i, t) in s.basis.iter().enumerate() {
                let _ = writeln!(out, "  basis {i}:");
                render_map(&mut out, "    ", t);
            }
        }
    }
    if let Some(c) = &r.chow {
        let _ = writeln!(out, "Chow ring up to degree {}", c.cap);
        let _ = writeln!(out, "  dim A^k: {:?}", c.dims);
        let _ = writeln!(out, "  dim A_T^k: {:?}", c.equivariant_dims);
        for s in &c.structure_constants {
            let _ = writeln!(
                out,
                "  e[{},{}] * e[{},{}] = [{}]",
                s.left[0],
                s.left[1],
                s.right[0],
                s.right[1],
                s.coefficients.join(", ")
            );
        }
    }
    if let Some(v) = &r.verification {
        let _ = writeln!(out, "{}", if v.passed { "PASS" } else { "FAIL" });
        let _ = writeln!(out, "labels: {}", v.label_map);
        for a in &v.relevance {
            let show = |l: &[WeightDimension]| {
                l.iter()
                    .map(|w| {
                        format!(
                            "({},{}):{}",
                            w.cocharacter[0], w.cocharacter[1], w.dimension
                        )
                    })
                    .collect::<Vec<_>>()
                    .join(" ")
            };
            let _ = writeln!(
                out,
                "  relevance at {}: {}  {}",
                a.point,
                if a.passed { "ok" } else { "MISMATCH" },
                show(&a.computed)
            );
            if !a.passed {
                let _ = writeln!(out, "    expected {}", show(&a.expected));
            }
        }
        for f in &v.relations {
            let _ = writeln!(
                out,
                "  relation {:>2}: {}  {}",
                f.number,
                f.relation,
                if f.passed { "holds" } else { "FAILS" }
            );
            for x in &f.failures {
                let _ = writeln!(out, "    {x}");
            }
        }
        for d in &v.degrees {
            let _ = writeln!(
                out,
                "  degree {}: expected {}, module {}, relation system {}  {}",
                d.degree,
                d.expected_dim,
                d.module_dim,
                d.relation_dim,
                if d.passed { "ok" } else { "MISMATCH" }
            );
        }
        let _ = writeln!(
            out,
            "  random samples (seed {}): {} of {} violate a relation",
            v.seed, v.sample_failures, v.samples
        );
    }
    out
}
