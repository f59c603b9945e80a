//! Path algebras of quivers modulo relations.
//!
//! Paths compose left to right: `a*b` is `a` followed by `b`. The basis is the
//! set of paths that are not leading terms of the truncated ideal, where the
//! leading term of an element is its largest path in length-lexicographic order.

use std::collections::HashMap;

use super::structure::Structure;
use super::Algebra;
use crate::error::{Error, Result};
use crate::linalg::{Field, Mat, Scalar};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Arrow {
    pub name: String,
    pub from: usize,
    pub to: usize,
}

/// `coeff` times the path through the named arrows.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RelationTerm {
    pub path: Vec<String>,
    pub coeff: Scalar,
}

#[derive(Clone, Debug)]
pub struct QuiverPresentation {
    pub field: Field,
    pub vertices: Vec<String>,
    pub arrows: Vec<Arrow>,
    pub relations: Vec<Vec<RelationTerm>>,
    pub cap: usize,
}

/// A path: either trivial at a vertex or a nonempty arrow sequence.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
struct Path {
    source: usize,
    target: usize,
    arrows: Vec<usize>,
}

impl Path {
    fn len(&self) -> usize {
        self.arrows.len()
    }

    fn then(&self, other: &Path) -> Option<Path> {
        if self.target != other.source {
            return None;
        }
        let mut arrows = self.arrows.clone();
        arrows.extend(&other.arrows);
        Some(Path {
            source: self.source,
            target: other.target,
            arrows,
        })
    }
}

struct Relation {
    source: usize,
    target: usize,
    min_len: usize,
    max_len: usize,
    terms: Vec<(Path, Scalar)>,
}

impl QuiverPresentation {
    fn parse_relations(&self) -> Result<Vec<Relation>> {
        let index: HashMap<&str, usize> = self
            .arrows
            .iter()
            .enumerate()
            .map(|(i, a)| (a.name.as_str(), i))
            .collect();
        let mut out = Vec::new();
        for (r, rel) in self.relations.iter().enumerate() {
            let mut terms = Vec::new();
            let mut ends = None;
            for t in rel {
                if t.path.is_empty() {
                    return Err(Error::MalformedRelation(format!("relation {r} has an empty path")));
                }
                let ids = t
                    .path
                    .iter()
                    .map(|n| {
                        index
                            .get(n.as_str())
                            .copied()
                            .ok_or_else(|| Error::MalformedRelation(format!("unknown arrow {n:?} in relation {r}")))
                    })
                    .collect::<Result<Vec<_>>>()?;
                for w in ids.windows(2) {
                    if self.arrows[w[0]].to != self.arrows[w[1]].from {
                        return Err(Error::MalformedRelation(format!(
                            "arrows {} and {} do not compose in relation {r}",
                            self.arrows[w[0]].name, self.arrows[w[1]].name
                        )));
                    }
                }
                let path = Path {
                    source: self.arrows[ids[0]].from,
                    target: self.arrows[*ids.last().expect("nonempty")].to,
                    arrows: ids,
                };
                match ends {
                    None => ends = Some((path.source, path.target)),
                    Some(e) if e != (path.source, path.target) => {
                        return Err(Error::MalformedRelation(format!(
                            "relation {r} combines paths with different endpoints"
                        )))
                    }
                    _ => {}
                }
                if t.coeff.field() != self.field {
                    return Err(Error::MalformedRelation(format!(
                        "coefficient field mismatch in relation {r}"
                    )));
                }
                if !t.coeff.is_zero() {
                    terms.push((path, t.coeff.clone()));
                }
            }
            let Some((source, target)) = ends else {
                return Err(Error::MalformedRelation(format!("relation {r} is empty")));
            };
            if terms.is_empty() {
                continue;
            }
            let min_len = terms.iter().map(|(p, _)| p.len()).min().expect("nonempty");
            let max_len = terms.iter().map(|(p, _)| p.len()).max().expect("nonempty");
            out.push(Relation {
                source,
                target,
                min_len,
                max_len,
                terms,
            });
        }
        Ok(out)
    }

    fn validate(&self) -> Result<()> {
        if self.cap == 0 {
            return Err(Error::MalformedRelation("path length cap must be positive".into()));
        }
        for a in &self.arrows {
            if a.from >= self.vertices.len() || a.to >= self.vertices.len() {
                return Err(Error::MalformedRelation(format!(
                    "arrow {} has an unknown endpoint",
                    a.name
                )));
            }
        }
        let mut names: Vec<&str> = self.arrows.iter().map(|a| a.name.as_str()).collect();
        names.sort();
        if names.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::MalformedRelation("duplicate arrow names".into()));
        }
        Ok(())
    }

    /// All paths of length at most `max`, grouped by length, each group sorted.
    fn paths_up_to(&self, max: usize) -> Vec<Vec<Path>> {
        let mut levels = vec![(0..self.vertices.len())
            .map(|v| Path {
                source: v,
                target: v,
                arrows: Vec::new(),
            })
            .collect::<Vec<_>>()];
        for len in 1..=max {
            let mut next = Vec::new();
            for p in &levels[len - 1] {
                for (i, a) in self.arrows.iter().enumerate() {
                    if a.from == p.target {
                        let mut arrows = p.arrows.clone();
                        arrows.push(i);
                        next.push(Path {
                            source: p.source,
                            target: a.to,
                            arrows,
                        });
                    }
                }
            }
            next.sort();
            levels.push(next);
        }
        levels
    }
}

/// Length-lex key: longer paths are larger; ties broken by arrow sequence, then vertex.
fn order_key(p: &Path) -> (usize, Vec<usize>, usize) {
    (p.len(), p.arrows.clone(), p.source)
}

/// Spans `{ p r q }` whose terms all have length `<= limit`, optionally dropping
/// terms of length `>= drop_from`.
fn ideal_rows(
    relations: &[Relation],
    levels: &[Vec<Path>],
    index: &HashMap<Path, usize>,
    limit: usize,
    drop_from: Option<usize>,
    field: Field,
    width: usize,
) -> Vec<Vec<Scalar>> {
    let mut rows = Vec::new();
    for rel in relations {
        let bound = if drop_from.is_some() { rel.min_len } else { rel.max_len };
        if bound > limit {
            continue;
        }
        let room = limit - bound;
        for lp in 0..=room {
            for p in levels[lp].iter().filter(|p| p.target == rel.source) {
                for level in &levels[..=room - lp] {
                    for q in level.iter().filter(|q| q.source == rel.target) {
                        let mut row = field.zeros(width);
                        for (path, c) in &rel.terms {
                            let full = p.then(path).and_then(|x| x.then(q)).expect("composable");
                            if drop_from.is_some_and(|d| full.len() >= d) {
                                continue;
                            }
                            let k = index[&full];
                            row[k] = &row[k] + c;
                        }
                        if row.iter().any(|x| !x.is_zero()) {
                            rows.push(row);
                        }
                    }
                }
            }
        }
    }
    rows
}

impl Algebra {
    /// Path algebra modulo relations. Vertex idempotents become the idempotents.
    pub fn from_quiver(q: &QuiverPresentation) -> Result<Algebra> {
        q.validate()?;
        let relations = q.parse_relations()?;
        let field = q.field;
        for limit in 1..=q.cap + 1 {
            let levels = q.paths_up_to(limit);
            // columns ordered from largest to smallest path so pivots are leading terms
            let mut all: Vec<Path> = levels.iter().flatten().cloned().collect();
            all.sort_by_key(|p| std::cmp::Reverse(order_key(p)));
            let index: HashMap<Path, usize> = all.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
            let width = all.len();
            let rows = ideal_rows(&relations, &levels, &index, limit, None, field, width);
            let ideal = Mat::from_rows(field, width, &rows);
            let rank = ideal.rank();
            let top: Vec<Vec<Scalar>> = levels[limit]
                .iter()
                .map(|p| field.unit_vector(width, index[p]))
                .collect();
            let with_top = Mat::vstack(field, width, &[&ideal, &Mat::from_rows(field, width, &top)]);
            if with_top.rank() != rank {
                continue;
            }
            // every path of length `limit` lies in the ideal; work modulo them
            let short: Vec<Path> = all.iter().filter(|p| p.len() < limit).cloned().collect();
            let sindex: HashMap<Path, usize> = short.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
            let rows = ideal_rows(&relations, &levels, &sindex, limit, Some(limit), field, short.len());
            let (rref, pivots) = Mat::from_rows(field, short.len(), &rows).rref();
            let basis: Vec<usize> = (0..short.len()).filter(|c| !pivots.contains(c)).collect();
            return build(q, &short, &sindex, &rref, &pivots, &basis, limit);
        }
        Err(Error::NotFiniteDimensionalWithinCap { cap: q.cap })
    }
}

fn build(
    q: &QuiverPresentation,
    short: &[Path],
    sindex: &HashMap<Path, usize>,
    rref: &Mat,
    pivots: &[usize],
    basis: &[usize],
    limit: usize,
) -> Result<Algebra> {
    let field = q.field;
    // present the basis in increasing length-lex order
    let mut basis: Vec<usize> = basis.to_vec();
    basis.sort_by_key(|&i| order_key(&short[i]));
    let position: HashMap<usize, usize> = basis.iter().enumerate().map(|(k, &i)| (i, k)).collect();
    let d = basis.len();
    let reduce = |v: &mut Vec<Scalar>| {
        for (r, &p) in pivots.iter().enumerate() {
            if v[p].is_zero() {
                continue;
            }
            let c = v[p].clone();
            for (x, y) in v.iter_mut().zip(rref.row(r)) {
                *x = &*x - &(&c * y);
            }
        }
    };
    let mut mult = vec![vec![field.zeros(d); d]; d];
    for (i, &bi) in basis.iter().enumerate() {
        for (j, &bj) in basis.iter().enumerate() {
            let Some(path) = short[bi].then(&short[bj]) else {
                continue;
            };
            if path.len() >= limit {
                continue;
            }
            let mut v = field.zeros(short.len());
            v[sindex[&path]] = field.one();
            reduce(&mut v);
            for (k, c) in v.into_iter().enumerate() {
                if !c.is_zero() {
                    mult[i][j][position[&k]] = c;
                }
            }
        }
    }
    let vertex_idem = |v: usize| {
        let p = Path {
            source: v,
            target: v,
            arrows: Vec::new(),
        };
        let mut e = field.zeros(short.len());
        e[sindex[&p]] = field.one();
        reduce(&mut e);
        basis.iter().map(|&b| e[b].clone()).collect::<Vec<Scalar>>()
    };
    let idempotents: Vec<Vec<Scalar>> = (0..q.vertices.len()).map(vertex_idem).collect();
    let mut unit = field.zeros(d);
    for e in &idempotents {
        for (u, x) in unit.iter_mut().zip(e) {
            *u = &*u + x;
        }
    }
    let labels = basis
        .iter()
        .map(|&b| {
            let p = &short[b];
            if p.arrows.is_empty() {
                format!("e_{}", q.vertices[p.source])
            } else {
                p.arrows
                    .iter()
                    .map(|&a| q.arrows[a].name.clone())
                    .collect::<Vec<_>>()
                    .join("*")
            }
        })
        .collect();
    // spans the arrow ideal when no relation mixes in trivial paths
    let arrows: Vec<Vec<Scalar>> = (0..d)
        .filter(|&k| !short[basis[k]].arrows.is_empty())
        .map(|k| field.unit_vector(d, k))
        .collect();
    let hint = Mat::from_columns(field, d, &arrows);
    let s = Structure::from_dense(field, &mult, unit)?;
    Algebra::from_structure(s, Some(labels), Some(idempotents), Some(hint))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn loop_with(field: Field, relations: Vec<Vec<RelationTerm>>, cap: usize) -> QuiverPresentation {
        QuiverPresentation {
            field,
            vertices: vec!["1".into()],
            arrows: vec![Arrow {
                name: "t".into(),
                from: 0,
                to: 0,
            }],
            relations,
            cap,
        }
    }

    #[test]
    fn loop_modulo_square_is_dual_numbers() {
        let f = Field::rationals();
        let rel = vec![vec![RelationTerm {
            path: vec!["t".into(), "t".into()],
            coeff: f.one(),
        }]];
        let a = Algebra::from_quiver(&loop_with(f, rel, 10)).unwrap();
        assert_eq!(a.dim(), 2);
        assert_eq!(a.labels(), ["e_1", "t"]);
        assert_eq!(a.radical().cols(), 1);
        assert_eq!(a.idempotents().len(), 1);
    }

    #[test]
    fn free_loop_is_infinite() {
        let err = Algebra::from_quiver(&loop_with(Field::rationals(), vec![], 10)).unwrap_err();
        assert!(matches!(err, Error::NotFiniteDimensionalWithinCap { cap: 10 }));
    }

    #[test]
    fn single_arrow() {
        let q = QuiverPresentation {
            field: Field::rationals(),
            vertices: vec!["1".into(), "2".into()],
            arrows: vec![Arrow {
                name: "a".into(),
                from: 0,
                to: 1,
            }],
            relations: vec![],
            cap: 5,
        };
        let a = Algebra::from_quiver(&q).unwrap();
        assert_eq!(a.dim(), 3);
        assert_eq!(a.radical().cols(), 1);
        assert_eq!(a.cartan_matrix(), vec![vec![1, 1], vec![0, 1]]);
    }

    #[test]
    fn relation_between_unknown_arrows_is_rejected() {
        let f = Field::rationals();
        let rel = vec![vec![RelationTerm {
            path: vec!["s".into()],
            coeff: f.one(),
        }]];
        let err = Algebra::from_quiver(&loop_with(f, rel, 4)).unwrap_err();
        assert!(matches!(err, Error::MalformedRelation(_)));
    }

    #[test]
    fn arrow_ideal_is_the_radical_in_characteristic_two() {
        // 1 -> 2 -> 3 -> 4, no relations; the trace form is useless over F_2
        let f = Field::prime(2).unwrap();
        let q = QuiverPresentation {
            field: f,
            vertices: (1..=4).map(|i| i.to_string()).collect(),
            arrows: (0..3)
                .map(|i| Arrow {
                    name: format!("a{i}"),
                    from: i,
                    to: i + 1,
                })
                .collect(),
            relations: vec![],
            cap: 5,
        };
        let a = Algebra::from_quiver(&q).unwrap();
        assert_eq!(a.dim(), 10);
        assert_eq!(a.radical().cols(), 6);
        assert_eq!(a.radical_power_dim(3), 1);
        assert_eq!(a.radical_power_dim(4), 0);
    }
}
