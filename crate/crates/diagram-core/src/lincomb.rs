//! Exact rational linear combinations of diagrams.
//!
//! A [`LinComb`] is a finite formal sum of canonical diagrams sharing one
//! interface (base weight, domain word, codomain word), with nonzero
//! rational coefficients. The zero morphism is the empty sum, which is why
//! the interface is stored separately. All constructors canonicalize their
//! diagram keys, so structural equality of `LinComb`s is equality modulo the
//! interchange law.

use std::collections::BTreeMap;

use cartan_config::{CartanDatum, Rat, Weight};
use num_traits::Zero;

use crate::canonical::canonical_form;
use crate::diagram::Diagram;
use crate::error::DiagramError;
use crate::word::SignedWord;

/// The boundary data shared by every term of a linear combination.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Interface {
    /// Weight of the region right of all strands.
    pub base: Weight,
    /// Bottom boundary word.
    pub dom: SignedWord,
    /// Top boundary word.
    pub cod: SignedWord,
}

impl Interface {
    /// The interface of morphisms `dom → cod` based at `base`.
    pub fn new(base: Weight, dom: SignedWord, cod: SignedWord) -> Interface {
        Interface { base, dom, cod }
    }

    /// The interface of a single diagram.
    pub fn of(d: &Diagram) -> Interface {
        Interface {
            base: d.base().clone(),
            dom: d.domain().clone(),
            cod: d.codomain().clone(),
        }
    }
}

impl std::fmt::Display for Interface {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{} => {} @ {}", self.dom, self.cod, self.base)
    }
}

/// A rational linear combination of diagrams with a common interface.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinComb {
    interface: Interface,
    terms: BTreeMap<Diagram, Rat>,
}

impl LinComb {
    /// The zero morphism with the given interface.
    pub fn zero(interface: Interface) -> LinComb {
        LinComb { interface, terms: BTreeMap::new() }
    }

    /// A single diagram with coefficient one.
    pub fn from_diagram(d: Diagram) -> LinComb {
        LinComb::from_scaled_diagram(num_traits::One::one(), d)
    }

    /// A single diagram with the given coefficient.
    pub fn from_scaled_diagram(coeff: Rat, d: Diagram) -> LinComb {
        let interface = Interface::of(&d);
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(canonical_form(&d), coeff);
        }
        LinComb { interface, terms }
    }

    /// The identity on `word` based at `base`.
    pub fn identity(word: SignedWord, base: Weight) -> LinComb {
        LinComb::from_diagram(Diagram::identity(word, base))
    }

    /// The common interface.
    pub fn interface(&self) -> &Interface {
        &self.interface
    }

    /// Whether this is the zero morphism.
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Number of terms.
    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// The terms in canonical (deterministic) order.
    pub fn iter(&self) -> impl Iterator<Item = (&Diagram, &Rat)> {
        self.terms.iter()
    }

    /// The coefficient of a diagram (zero if absent); canonicalizes first.
    pub fn coeff_of(&self, d: &Diagram) -> Rat {
        self.terms
            .get(&canonical_form(d))
            .cloned()
            .unwrap_or_else(Rat::zero)
    }

    /// Adds `coeff · d` in place.
    pub fn insert(&mut self, coeff: Rat, d: Diagram) -> Result<(), DiagramError> {
        let iface = Interface::of(&d);
        if iface != self.interface {
            return Err(DiagramError::InterfaceMismatch {
                left: self.interface.to_string(),
                right: iface.to_string(),
            });
        }
        if coeff.is_zero() {
            return Ok(());
        }
        let key = canonical_form(&d);
        let entry = self.terms.entry(key.clone()).or_insert_with(Rat::zero);
        *entry += coeff;
        if entry.is_zero() {
            self.terms.remove(&key);
        }
        Ok(())
    }

    /// `self + other`.
    pub fn add(&self, other: &LinComb) -> Result<LinComb, DiagramError> {
        if self.interface != other.interface {
            return Err(DiagramError::InterfaceMismatch {
                left: self.interface.to_string(),
                right: other.interface.to_string(),
            });
        }
        let mut out = self.clone();
        for (d, c) in &other.terms {
            let entry = out.terms.entry(d.clone()).or_insert_with(Rat::zero);
            *entry += c;
            if entry.is_zero() {
                out.terms.remove(d);
            }
        }
        Ok(out)
    }

    /// `self - other`.
    pub fn sub(&self, other: &LinComb) -> Result<LinComb, DiagramError> {
        self.add(&other.neg())
    }

    /// `-self`.
    pub fn neg(&self) -> LinComb {
        let mut out = self.clone();
        for c in out.terms.values_mut() {
            *c = -c.clone();
        }
        out
    }

    /// `q · self`.
    pub fn scale(&self, q: &Rat) -> LinComb {
        if q.is_zero() {
            return LinComb::zero(self.interface.clone());
        }
        let mut out = self.clone();
        for c in out.terms.values_mut() {
            *c *= q;
        }
        out
    }

    /// Vertical composition `self ∘ other` (`other` applied first, i.e.
    /// drawn below). Requires matching base weights and `other`'s codomain
    /// equal to `self`'s domain.
    pub fn vcomp(&self, other: &LinComb) -> Result<LinComb, DiagramError> {
        if self.interface.base != other.interface.base {
            return Err(DiagramError::BaseMismatch {
                left: self.interface.base.to_string(),
                right: other.interface.base.to_string(),
            });
        }
        if self.interface.dom != other.interface.cod {
            return Err(DiagramError::VerticalMismatch {
                upper: self.interface.dom.to_string(),
                lower: other.interface.cod.to_string(),
            });
        }
        let interface = Interface::new(
            self.interface.base.clone(),
            other.interface.dom.clone(),
            self.interface.cod.clone(),
        );
        let mut out = LinComb::zero(interface);
        for (da, ca) in &self.terms {
            for (db, cb) in &other.terms {
                let d = crate::compose::diagram_vcomp(da, db);
                out.insert(ca.clone() * cb.clone(), d)?;
            }
        }
        Ok(out)
    }

    /// Horizontal composition `self ⋆ other`, with `self` drawn to the
    /// *left* of `other`. The base weight of `self` must equal the weight of
    /// `other`'s leftmost region.
    pub fn hcomp(&self, other: &LinComb, datum: &CartanDatum) -> Result<LinComb, DiagramError> {
        let middle = other
            .interface
            .dom
            .weight_left(&other.interface.base, datum);
        if self.interface.base != middle {
            return Err(DiagramError::HorizontalMismatch {
                left_base: self.interface.base.to_string(),
                right_left: middle.to_string(),
            });
        }
        let interface = Interface::new(
            other.interface.base.clone(),
            self.interface.dom.concat(&other.interface.dom),
            self.interface.cod.concat(&other.interface.cod),
        );
        let mut out = LinComb::zero(interface);
        for (da, ca) in &self.terms {
            for (db, cb) in &other.terms {
                let d = crate::compose::diagram_hcomp(da, db);
                out.insert(ca.clone() * cb.clone(), d)?;
            }
        }
        Ok(out)
    }

    /// Sums an iterator of equally-interfaced combinations.
    pub fn sum(
        interface: Interface,
        items: impl IntoIterator<Item = LinComb>,
    ) -> Result<LinComb, DiagramError> {
        let mut out = LinComb::zero(interface);
        for item in items {
            out = out.add(&item)?;
        }
        Ok(out)
    }
}

impl std::fmt::Display for LinComb {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0 : {}", self.interface);
        }
        for (k, (d, c)) in self.terms.iter().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({}) {}", cartan_config::rat_to_string(c), d)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::Slice;
    use crate::generator::GeneratorKind::*;
    use crate::word::Letter;
    use cartan_config::{a2, rat_int};

    #[test]
    fn cancellation_gives_zero() {
        let datum = a2();
        let d = Diagram::new(
            Weight::zero(2),
            SignedWord(vec![Letter::up(0)]),
            vec![Slice::new(0, UpDot(0))],
            &datum,
        )
        .unwrap();
        let one = LinComb::from_diagram(d.clone());
        let z = one.sub(&one).unwrap();
        assert!(z.is_zero());
        assert_eq!(z.coeff_of(&d), rat_int(0));
    }

    #[test]
    fn interchange_variants_merge() {
        let datum = a2();
        let base = Weight::zero(2);
        let dom = SignedWord(vec![Letter::up(0), Letter::up(1)]);
        let a = Diagram::new(
            base.clone(),
            dom.clone(),
            vec![Slice::new(0, UpDot(0)), Slice::new(1, UpDot(1))],
            &datum,
        )
        .unwrap();
        let b = Diagram::new(
            base,
            dom,
            vec![Slice::new(1, UpDot(1)), Slice::new(0, UpDot(0))],
            &datum,
        )
        .unwrap();
        let sum = LinComb::from_diagram(a).add(&LinComb::from_diagram(b)).unwrap();
        assert_eq!(sum.num_terms(), 1);
        let (_, c) = sum.iter().next().unwrap();
        assert_eq!(c.clone(), rat_int(2));
    }

    #[test]
    fn interface_mismatch_rejected() {
        let datum = a2();
        let a = LinComb::identity(SignedWord(vec![Letter::up(0)]), Weight::zero(2));
        let b = LinComb::identity(SignedWord(vec![Letter::up(1)]), Weight::zero(2));
        assert!(a.add(&b).is_err());
        let _ = datum;
    }
}
