//! Verified lattice homomorphisms, sublattice embeddings and the
//! double-negation map onto the regular elements.

use std::sync::Arc;

use crate::boolean::BooleanAlgebra;
use crate::error::{Error, Result};
use crate::lattice::{DistributiveLattice, Elem};
use crate::poset::FinitePoset;

/// Which structure a homomorphism must preserve.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash)]
pub enum Flavor {
    #[default]
    Lattice,
    /// Lattice structure plus implication.
    Heyting,
}

impl std::str::FromStr for Flavor {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "lattice" => Ok(Flavor::Lattice),
            "heyting" => Ok(Flavor::Heyting),
            other => Err(Error::Mismatch(format!("unknown flavor `{other}`"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LatticeHom {
    domain: Arc<DistributiveLattice>,
    codomain: Arc<DistributiveLattice>,
    table: Vec<Elem>,
    flavor: Flavor,
}

/// Verifies that `table` preserves bounds, meets and joins (and
/// implication under [`Flavor::Heyting`]).
pub fn check_hom(
    table: Vec<Elem>,
    domain: &Arc<DistributiveLattice>,
    codomain: &Arc<DistributiveLattice>,
    flavor: Flavor,
) -> Result<LatticeHom> {
    if table.len() != domain.len() {
        let missing = Elem(table.len().min(domain.len().saturating_sub(1)));
        return Err(Error::PartialMap(domain.elem_name(missing).to_owned()));
    }
    if let Some(bad) = table.iter().find(|v| !codomain.contains(**v)) {
        return Err(Error::ForeignElement(bad.to_string()));
    }
    if let Some(err) = first_violation(&table, domain, codomain, flavor) {
        return Err(err);
    }
    Ok(LatticeHom {
        domain: Arc::clone(domain),
        codomain: Arc::clone(codomain),
        table,
        flavor,
    })
}

fn first_violation(
    f: &[Elem],
    dom: &DistributiveLattice,
    cod: &DistributiveLattice,
    flavor: Flavor,
) -> Option<Error> {
    let name = |x: Elem| dom.elem_name(x).to_owned();
    if f[dom.bottom().0] != cod.bottom() {
        return Some(Error::NotAHom {
            law: "bottom",
            witness: name(dom.bottom()),
        });
    }
    if f[dom.top().0] != cod.top() {
        return Some(Error::NotAHom {
            law: "top",
            witness: name(dom.top()),
        });
    }
    for x in dom.elements() {
        for y in dom.elements() {
            let pair = || format!("({}, {})", name(x), name(y));
            if f[dom.meet(x, y).0] != cod.meet(f[x.0], f[y.0]) {
                return Some(Error::NotAHom {
                    law: "meet",
                    witness: pair(),
                });
            }
            if f[dom.join(x, y).0] != cod.join(f[x.0], f[y.0]) {
                return Some(Error::NotAHom {
                    law: "join",
                    witness: pair(),
                });
            }
            if flavor == Flavor::Heyting && f[dom.implies(x, y).0] != cod.implies(f[x.0], f[y.0]) {
                return Some(Error::NotAHom {
                    law: "implication",
                    witness: pair(),
                });
            }
        }
    }
    None
}

impl LatticeHom {
    /// Builds and verifies a hom from `(source, target)` name pairs; every
    /// domain element must be mapped exactly once.
    pub fn from_names<S: AsRef<str>>(
        pairs: &[(S, S)],
        domain: &Arc<DistributiveLattice>,
        codomain: &Arc<DistributiveLattice>,
        flavor: Flavor,
    ) -> Result<Self> {
        let mut table: Vec<Option<Elem>> = vec![None; domain.len()];
        for (x, y) in pairs {
            let x = domain
                .elem(x.as_ref())
                .map_err(|_| Error::ForeignElement(x.as_ref().to_owned()))?;
            let y = codomain
                .elem(y.as_ref())
                .map_err(|_| Error::ForeignElement(y.as_ref().to_owned()))?;
            table[x.0] = Some(y);
        }
        let table = table
            .into_iter()
            .enumerate()
            .map(|(i, v)| v.ok_or_else(|| Error::PartialMap(domain.elem_name(Elem(i)).into())))
            .collect::<Result<Vec<_>>>()?;
        check_hom(table, domain, codomain, flavor)
    }

    pub fn identity(lattice: &Arc<DistributiveLattice>, flavor: Flavor) -> Self {
        LatticeHom {
            domain: Arc::clone(lattice),
            codomain: Arc::clone(lattice),
            table: lattice.elements().collect(),
            flavor,
        }
    }

    #[inline]
    pub fn apply(&self, x: Elem) -> Elem {
        self.table[x.0]
    }

    pub fn table(&self) -> &[Elem] {
        &self.table
    }

    pub fn domain(&self) -> &Arc<DistributiveLattice> {
        &self.domain
    }

    pub fn codomain(&self) -> &Arc<DistributiveLattice> {
        &self.codomain
    }

    pub fn flavor(&self) -> Flavor {
        self.flavor
    }

    /// `other ∘ self`.
    pub fn then(&self, other: &LatticeHom) -> Result<LatticeHom> {
        if *self.codomain != *other.domain {
            return Err(Error::Mismatch("composition of non-matching homs".into()));
        }
        let table = self.table.iter().map(|&y| other.apply(y)).collect();
        let flavor = if self.flavor == Flavor::Heyting && other.flavor == Flavor::Heyting {
            Flavor::Heyting
        } else {
            Flavor::Lattice
        };
        Ok(LatticeHom {
            domain: Arc::clone(&self.domain),
            codomain: Arc::clone(&other.codomain),
            table,
            flavor,
        })
    }

    pub fn is_injective(&self) -> bool {
        self.first_collision().is_none()
    }

    fn first_collision(&self) -> Option<(Elem, Elem)> {
        for x in self.domain.elements() {
            for y in self.domain.elements().skip(x.0 + 1) {
                if self.apply(x) == self.apply(y) {
                    return Some((x, y));
                }
            }
        }
        None
    }

    /// `x->y` pairs by name, in domain order.
    pub fn render(&self) -> String {
        self.domain
            .elements()
            .map(|x| {
                format!(
                    "{}->{}",
                    self.domain.elem_name(x),
                    self.codomain.elem_name(self.apply(x))
                )
            })
            .collect::<Vec<_>>()
            .join(" ")
    }
}

/// An injective lattice homomorphism.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Embedding {
    hom: LatticeHom,
}

impl Embedding {
    pub fn new(hom: LatticeHom) -> Result<Self> {
        if let Some((x, y)) = hom.first_collision() {
            let d = &hom.domain;
            return Err(Error::NotInjective(
                d.elem_name(x).into(),
                d.elem_name(y).into(),
                hom.codomain.elem_name(hom.apply(x)).into(),
            ));
        }
        Ok(Embedding { hom })
    }

    pub fn hom(&self) -> &LatticeHom {
        &self.hom
    }

    pub fn apply(&self, x: Elem) -> Elem {
        self.hom.apply(x)
    }

    pub fn domain(&self) -> &Arc<DistributiveLattice> {
        self.hom.domain()
    }

    pub fn codomain(&self) -> &Arc<DistributiveLattice> {
        self.hom.codomain()
    }

    /// Whether `y` is in the image.
    pub fn covers(&self, y: Elem) -> bool {
        self.hom.table.contains(&y)
    }
}

/// The sublattice of `lp` on `subset` and its inclusion.
///
/// The induced lattice keeps `lp`'s names and canonical order.
pub fn sublattice_embedding(
    lp: &Arc<DistributiveLattice>,
    subset: &[Elem],
) -> Result<(Arc<DistributiveLattice>, Embedding)> {
    let mut members: Vec<Elem> = subset.to_vec();
    if let Some(bad) = members.iter().find(|e| !lp.contains(**e)) {
        return Err(Error::ForeignElement(bad.to_string()));
    }
    members.sort();
    members.dedup();
    if !members.contains(&lp.bottom()) || !members.contains(&lp.top()) {
        return Err(Error::MissingBounds(
            lp.elem_name(lp.bottom()).into(),
            lp.elem_name(lp.top()).into(),
        ));
    }
    for (i, &x) in members.iter().enumerate() {
        for &y in &members[i + 1..] {
            for (op, z) in [("meet", lp.meet(x, y)), ("join", lp.join(x, y))] {
                if !members.contains(&z) {
                    return Err(Error::NotClosed(
                        lp.elem_name(x).into(),
                        lp.elem_name(y).into(),
                        op,
                        lp.elem_name(z).into(),
                    ));
                }
            }
        }
    }
    let names: Vec<String> = members
        .iter()
        .map(|&x| lp.elem_name(x).to_owned())
        .collect();
    let n = members.len();
    let mut leq = vec![false; n * n];
    for (i, &x) in members.iter().enumerate() {
        for (j, &y) in members.iter().enumerate() {
            leq[i * n + j] = lp.leq(x, y);
        }
    }
    let sub = DistributiveLattice::from_poset(FinitePoset::from_matrix(names, leq)?)?
        .with_name(format!("{}|sub", lp.name()));
    let sub = Arc::new(sub);
    let hom = check_hom(members, &sub, lp, Flavor::Lattice)?;
    Ok((sub, Embedding::new(hom)?))
}

/// Same as [`sublattice_embedding`] with the subset given by name.
pub fn sublattice_by_names<S: AsRef<str>>(
    lp: &Arc<DistributiveLattice>,
    subset: &[S],
) -> Result<(Arc<DistributiveLattice>, Embedding)> {
    let elems = subset
        .iter()
        .map(|s| lp.elem(s.as_ref()))
        .collect::<Result<Vec<_>>>()?;
    sublattice_embedding(lp, &elems)
}

/// The regular elements of a lattice with the double-negation map onto them.
#[derive(Debug, Clone)]
pub struct Booleanization {
    /// Regular elements of the source, in canonical order.
    pub regulars: Vec<Elem>,
    /// Regular elements as a Boolean algebra; its element `i` is `regulars[i]`.
    pub algebra: BooleanAlgebra,
    /// `x ↦ ¬¬x`, verified as a Heyting homomorphism.
    pub hom: LatticeHom,
}

pub fn booleanization(l: &Arc<DistributiveLattice>) -> Result<Booleanization> {
    if l.is_degenerate() {
        return Err(Error::DegenerateLattice);
    }
    let regulars: Vec<Elem> = l.elements().filter(|&x| l.double_neg(x) == x).collect();
    let n = regulars.len();
    let names: Vec<String> = regulars
        .iter()
        .map(|&x| l.elem_name(x).to_owned())
        .collect();
    let mut leq = vec![false; n * n];
    for (i, &x) in regulars.iter().enumerate() {
        for (j, &y) in regulars.iter().enumerate() {
            leq[i * n + j] = l.leq(x, y);
        }
    }
    let regular = DistributiveLattice::from_poset(FinitePoset::from_matrix(names, leq)?)?
        .with_name(format!("{}|regular", l.name()));
    let pos = |x: Elem| regulars.binary_search(&x).map(Elem);
    for (i, &x) in regulars.iter().enumerate() {
        for (j, &y) in regulars.iter().enumerate() {
            let want = pos(l.double_neg(l.join(x, y)))
                .map_err(|_| Error::Internal("double negation is not regular".into()))?;
            if regular.meet(Elem(i), Elem(j)) != pos(l.meet(x, y)).unwrap_or(Elem(usize::MAX))
                || regular.join(Elem(i), Elem(j)) != want
            {
                return Err(Error::Internal(
                    "regular elements are not closed under the induced operations".into(),
                ));
            }
        }
    }
    let algebra = BooleanAlgebra::from_lattice(regular)?;
    let table = l
        .elements()
        .map(|x| {
            pos(l.double_neg(x))
                .map_err(|_| Error::Internal("double negation is not regular".into()))
        })
        .collect::<Result<Vec<_>>>()?;
    let hom = check_hom(table, l, algebra.lattice(), Flavor::Heyting)?;
    Ok(Booleanization {
        regulars,
        algebra,
        hom,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::boolean::build_boolean_algebra;
    use crate::catalog;

    #[test]
    fn c3_into_b2() {
        let c3 = Arc::new(catalog::c3());
        let b2 = build_boolean_algebra(1).unwrap();
        let b = b2.lattice();
        let ok = LatticeHom::from_names(
            &[("0", "0"), ("m", "e1"), ("1", "e1")],
            &c3,
            b,
            Flavor::Lattice,
        );
        assert!(ok.is_ok());

        let m_to_zero = [("0", "0"), ("m", "0"), ("1", "e1")];
        assert!(LatticeHom::from_names(&m_to_zero, &c3, b, Flavor::Lattice).is_ok());
        let err = LatticeHom::from_names(&m_to_zero, &c3, b, Flavor::Heyting).unwrap_err();
        assert!(matches!(
            err,
            Error::NotAHom {
                law: "implication",
                ..
            }
        ));

        let err = LatticeHom::from_names(
            &[("0", "e1"), ("m", "e1"), ("1", "e1")],
            &c3,
            b,
            Flavor::Lattice,
        )
        .unwrap_err();
        assert!(matches!(err, Error::NotAHom { law: "bottom", .. }));
    }

    #[test]
    fn partial_and_foreign_maps() {
        let c3 = Arc::new(catalog::c3());
        let b = Arc::clone(build_boolean_algebra(1).unwrap().lattice());
        let err = LatticeHom::from_names(&[("0", "0"), ("1", "e1")], &c3, &b, Flavor::Lattice)
            .unwrap_err();
        assert_eq!(err, Error::PartialMap("m".into()));
        let err = LatticeHom::from_names(&[("z", "0")], &c3, &b, Flavor::Lattice).unwrap_err();
        assert_eq!(err, Error::ForeignElement("z".into()));
    }

    #[test]
    fn square_sublattices() {
        let sq = Arc::new(catalog::square());
        let (sub, emb) = sublattice_by_names(&sq, &["0", "a", "1"]).unwrap();
        assert_eq!(sub.names(), &["0", "a", "1"]);
        assert_eq!(emb.apply(Elem(1)), sq.elem("a").unwrap());

        let all: Vec<Elem> = sq.elements().collect();
        let (full, id) = sublattice_embedding(&sq, &all).unwrap();
        assert_eq!(full.names(), sq.names());
        assert_eq!(id.hom().table(), &all[..]);

        let err = sublattice_by_names(&sq, &["a", "1"]).unwrap_err();
        assert!(matches!(err, Error::MissingBounds(..)));
    }

    #[test]
    fn lam_subset_not_closed() {
        let lam = Arc::new(catalog::lam());
        let err = sublattice_by_names(&lam, &["0", "u", "v", "1"]).unwrap_err();
        assert_eq!(
            err,
            Error::NotClosed("u".into(), "v".into(), "join", "w".into())
        );
    }

    #[test]
    fn booleanization_examples() {
        let c3 = Arc::new(catalog::c3());
        let bz = booleanization(&c3).unwrap();
        assert_eq!(bz.algebra.lattice().names(), &["0", "1"]);
        assert_eq!(bz.hom.render(), "0->0 m->1 1->1");

        let lam = Arc::new(catalog::lam());
        let bz = booleanization(&lam).unwrap();
        assert_eq!(bz.algebra.lattice().names(), &["0", "u", "v", "1"]);
        assert_eq!(bz.algebra.atoms().len(), 2);
        assert_eq!(bz.hom.render(), "0->0 u->u v->v w->1 1->1");

        let b4 = Arc::clone(build_boolean_algebra(2).unwrap().lattice());
        let bz = booleanization(&b4).unwrap();
        assert_eq!(bz.regulars.len(), 4);
        assert_eq!(
            bz.hom.table(),
            LatticeHom::identity(&b4, Flavor::Heyting).table()
        );
    }

    #[test]
    fn degenerate_booleanization_is_an_error() {
        let one = Arc::new(catalog::trivial());
        assert_eq!(booleanization(&one).unwrap_err(), Error::DegenerateLattice);
    }
}
