//! Input documents: acted complexes, acted polytopes, and acted posets.

use std::sync::Arc;

use equiseries_core::complex::{ActedComplex, Coloring, SimplicialComplex};
use equiseries_core::grpchar::cyclotomic::parse_rational;
use equiseries_core::grpchar::{FiniteGroup, Permutation, DEFAULT_GROUP_CAP};
use equiseries_core::polytope::{
    AffineAction, AffineMap, GeoTriangulation, Halfspace, LatticePolytope,
};
use equiseries_core::posetgeo::{Poset, PosetAction};
use equiseries_core::Rational;
use serde::{Deserialize, Serialize};

/// `{"n_vertices": n, "facets": [[…]], "generators": [[images]], "coloring": […]}`.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ComplexDoc {
    pub n_vertices: usize,
    pub facets: Vec<Vec<usize>>,
    #[serde(default)]
    pub generators: Vec<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub coloring: Option<Vec<usize>>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct HalfspaceDoc {
    pub a: Vec<i64>,
    pub b: i64,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct GeneratorDoc {
    #[serde(rename = "A")]
    pub matrix: Vec<Vec<i64>>,
    pub b: Vec<i64>,
}

/// Coordinates may be integers or `"p/q"` strings; non-lattice values are
/// diagnosed by the triangulation checks rather than at parse time.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(untagged)]
pub enum CoordDoc {
    Int(i64),
    Rational(String),
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct TriangulationDoc {
    pub coords: Vec<Vec<CoordDoc>>,
    pub facets: Vec<Vec<usize>>,
}

/// `{"dim": d, "vertices": [[…]], "halfspaces": [{"a": […], "b": k}],
///   "generators": [{"A": [[…]], "b": […]}], "triangulation": {…}}`.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct PolytopeDoc {
    pub dim: usize,
    pub vertices: Vec<Vec<i64>>,
    pub halfspaces: Vec<HalfspaceDoc>,
    #[serde(default)]
    pub generators: Vec<GeneratorDoc>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub triangulation: Option<TriangulationDoc>,
}

/// `{"n": k, "covers": [[i, j], …], "generators": [[images]]}`.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct PosetDoc {
    pub n: usize,
    pub covers: Vec<Vec<usize>>,
    #[serde(default)]
    pub generators: Vec<Vec<usize>>,
}

/// The three accepted input shapes, sniffed by their distinguishing keys.
#[derive(Clone, Debug)]
pub enum InputDoc {
    Complex(ComplexDoc),
    Polytope(PolytopeDoc),
    Poset(PosetDoc),
}

pub fn parse_input(text: &str) -> Result<InputDoc, String> {
    let value: serde_json::Value =
        serde_json::from_str(text).map_err(|e| format!("invalid JSON: {e}"))?;
    let object = value
        .as_object()
        .ok_or_else(|| "input document must be a JSON object".to_string())?;
    if object.contains_key("n_vertices") {
        serde_json::from_value(value.clone())
            .map(InputDoc::Complex)
            .map_err(|e| format!("invalid complex document: {e}"))
    } else if object.contains_key("dim") {
        serde_json::from_value(value.clone())
            .map(InputDoc::Polytope)
            .map_err(|e| format!("invalid polytope document: {e}"))
    } else if object.contains_key("covers") || object.contains_key("n") {
        serde_json::from_value(value.clone())
            .map(InputDoc::Poset)
            .map_err(|e| format!("invalid poset document: {e}"))
    } else {
        Err("unrecognised document: expected n_vertices (complex), dim (polytope) or covers (poset)".into())
    }
}

fn permutations(images: &[Vec<usize>]) -> Result<Vec<Permutation>, String> {
    images
        .iter()
        .map(|v| Permutation::new(v.clone()).map_err(|e| e.to_string()))
        .collect()
}

pub struct BuiltComplex {
    pub acted: ActedComplex,
    pub coloring: Option<Coloring>,
}

impl ComplexDoc {
    pub fn build(&self, cap: usize) -> Result<BuiltComplex, String> {
        let complex =
            SimplicialComplex::new(self.n_vertices, self.facets.clone()).map_err(|e| e.to_string())?;
        let generators = permutations(&self.generators)?;
        let group = FiniteGroup::generate(self.n_vertices, &generators, cap)
            .map_err(|e| e.to_string())?;
        let acted = ActedComplex::from_vertex_group(complex, group).map_err(|e| e.to_string())?;
        let coloring = match &self.coloring {
            None => None,
            Some(colors) => {
                let palette = colors.iter().max().map(|&c| c + 1).unwrap_or(1);
                let coloring = Coloring::new(colors.clone(), palette).map_err(|e| e.to_string())?;
                coloring
                    .check_proper(acted.complex())
                    .map_err(|e| e.to_string())?;
                coloring.check_invariant(&acted).map_err(|e| e.to_string())?;
                Some(coloring)
            }
        };
        Ok(BuiltComplex { acted, coloring })
    }
}

pub struct BuiltPolytope {
    pub polytope: LatticePolytope,
    pub action: AffineAction,
    pub triangulation: Option<GeoTriangulation>,
}

impl PolytopeDoc {
    pub fn build(&self, cap: usize) -> Result<BuiltPolytope, String> {
        let halfspaces: Vec<Halfspace> = self
            .halfspaces
            .iter()
            .map(|h| Halfspace {
                normal: h.a.clone(),
                offset: h.b,
            })
            .collect();
        let polytope = LatticePolytope::new(self.dim, self.vertices.clone(), halfspaces)
            .map_err(|e| e.to_string())?;

        // The group of vertex permutations realised by the affine generators.
        let gen_maps: Vec<AffineMap> = self
            .generators
            .iter()
            .map(|g| AffineMap {
                matrix: g.matrix.clone(),
                translation: g.b.clone(),
            })
            .collect();
        let vertex_perms: Vec<Permutation> = gen_maps
            .iter()
            .enumerate()
            .map(|(gi, map)| {
                let images: Result<Vec<usize>, String> = polytope
                    .vertices()
                    .iter()
                    .map(|v| {
                        let image = map.apply(v);
                        polytope
                            .vertices()
                            .binary_search(&image)
                            .map_err(|_| format!("generator {gi} does not permute the vertices"))
                    })
                    .collect();
                images.and_then(|im| Permutation::new(im).map_err(|e| e.to_string()))
            })
            .collect::<Result<_, _>>()?;
        let group = FiniteGroup::generate(polytope.vertices().len().max(1), &vertex_perms, cap)
            .map_err(|e| e.to_string())?;
        let action =
            AffineAction::from_generators(group, &polytope, &gen_maps).map_err(|e| e.to_string())?;

        let triangulation = match &self.triangulation {
            None => None,
            Some(doc) => {
                let coords: Result<Vec<Vec<Rational>>, String> = doc
                    .coords
                    .iter()
                    .map(|row| {
                        row.iter()
                            .map(|c| match c {
                                CoordDoc::Int(v) => {
                                    Ok(Rational::from(equiseries_core::Int::from(*v)))
                                }
                                CoordDoc::Rational(s) => parse_rational(s),
                            })
                            .collect()
                    })
                    .collect();
                Some(
                    GeoTriangulation::new(coords?, doc.facets.clone())
                        .map_err(|e| e.to_string())?,
                )
            }
        };
        Ok(BuiltPolytope {
            polytope,
            action,
            triangulation,
        })
    }
}

pub struct BuiltPoset {
    pub poset: Poset,
    pub action: PosetAction,
}

impl PosetDoc {
    pub fn build(&self, cap: usize) -> Result<BuiltPoset, String> {
        let covers: Result<Vec<(usize, usize)>, String> = self
            .covers
            .iter()
            .map(|pair| {
                if pair.len() == 2 {
                    Ok((pair[0], pair[1]))
                } else {
                    Err(format!("cover {pair:?} must have exactly two entries"))
                }
            })
            .collect();
        let poset = Poset::from_covers(self.n, &covers?).map_err(|e| e.to_string())?;
        let generators = permutations(&self.generators)?;
        for (gi, g) in generators.iter().enumerate() {
            if !poset.is_automorphism(g) {
                return Err(format!("generator {gi} is not a poset automorphism"));
            }
        }
        let group =
            FiniteGroup::generate(self.n, &generators, cap).map_err(|e| e.to_string())?;
        let maps = group.elements().to_vec();
        let action = PosetAction::new(&poset, group, maps).map_err(|e| e.to_string())?;
        Ok(BuiltPoset { poset, action })
    }
}

pub fn group_cap(cap: Option<usize>) -> usize {
    cap.unwrap_or(DEFAULT_GROUP_CAP)
}

pub fn trivial_group() -> Arc<FiniteGroup> {
    FiniteGroup::trivial(1)
}
