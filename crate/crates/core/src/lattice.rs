//! Subgroups of Z² in Hermite normal form.

/// Floor division and modulo for possibly negative operands.
pub(crate) fn floor_div(a: i64, b: i64) -> i64 {
    a.div_euclid(b)
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
enum Form {
    Zero,
    /// generated by `(a, b)` with `a > 0`
    Slanted(i64, i64),
    /// generated by `(0, c)` with `c > 0`
    Vertical(i64),
    /// generated by `(a, b)` and `(0, c)` with `a, c > 0` and `0 <= b < c`
    Full(i64, i64, i64),
}

/// A subgroup of Z², stored in a reduced basis so that cosets have unique
/// representatives.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Lattice {
    form: Form,
}

impl Lattice {
    pub fn zero() -> Self {
        Lattice { form: Form::Zero }
    }

    pub fn from_generators(gens: &[(i64, i64)]) -> Self {
        let mut pivot = (0i64, 0i64);
        let mut vertical_gcd = 0i64;
        for &g in gens {
            let mut v = g;
            while v.0 != 0 {
                let q = pivot.0.div_euclid(v.0);
                pivot = (pivot.0 - q * v.0, pivot.1 - q * v.1);
                std::mem::swap(&mut pivot, &mut v);
            }
            vertical_gcd = gcd(vertical_gcd, v.1);
        }
        if pivot.0 < 0 {
            pivot = (-pivot.0, -pivot.1);
        }
        if pivot.0 == 0 {
            vertical_gcd = gcd(vertical_gcd, pivot.1);
        }
        let form = match (pivot.0 > 0, vertical_gcd > 0) {
            (false, false) => Form::Zero,
            (false, true) => Form::Vertical(vertical_gcd),
            (true, false) => Form::Slanted(pivot.0, pivot.1),
            (true, true) => Form::Full(pivot.0, pivot.1.rem_euclid(vertical_gcd), vertical_gcd),
        };
        Lattice { form }
    }

    pub fn generators(&self) -> Vec<(i64, i64)> {
        match self.form {
            Form::Zero => vec![],
            Form::Slanted(a, b) => vec![(a, b)],
            Form::Vertical(c) => vec![(0, c)],
            Form::Full(a, b, c) => vec![(a, b), (0, c)],
        }
    }

    pub fn rank(&self) -> usize {
        match self.form {
            Form::Zero => 0,
            Form::Slanted(..) | Form::Vertical(_) => 1,
            Form::Full(..) => 2,
        }
    }

    /// Number of cosets, when finite.
    pub fn index(&self) -> Option<u64> {
        match self.form {
            Form::Full(a, _, c) => Some((a * c) as u64),
            _ => None,
        }
    }

    /// The unique representative of `v + self`.
    pub fn reduce(&self, v: (i64, i64)) -> (i64, i64) {
        let (x, y) = v;
        match self.form {
            Form::Zero => v,
            Form::Slanted(a, b) => {
                let k = floor_div(x, a);
                (x - k * a, y - k * b)
            }
            Form::Vertical(c) => (x, y.rem_euclid(c)),
            Form::Full(a, b, c) => {
                let k = floor_div(x, a);
                (x - k * a, (y - k * b).rem_euclid(c))
            }
        }
    }

    pub fn contains(&self, v: (i64, i64)) -> bool {
        self.reduce(v) == (0, 0)
    }

    pub fn join(&self, other: &Lattice) -> Lattice {
        let mut g = self.generators();
        g.extend(other.generators());
        Lattice::from_generators(&g)
    }

    pub fn is_sublattice_of(&self, other: &Lattice) -> bool {
        self.generators().into_iter().all(|g| other.contains(g))
    }
}

fn gcd(a: i64, b: i64) -> i64 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn diagonal_lattice() {
        let l = Lattice::from_generators(&[(3, 0), (0, 3)]);
        assert_eq!(l.index(), Some(9));
        assert_eq!(l.reduce((4, -1)), (1, 2));
        assert!(l.contains((-3, 6)));
        assert!(!l.contains((1, 0)));
    }

    #[test]
    fn rank_deficient() {
        let l = Lattice::from_generators(&[(2, 0), (4, 0)]);
        assert_eq!(l.rank(), 1);
        assert_eq!(l.index(), None);
        assert_eq!(Lattice::from_generators(&[(0, 0)]).rank(), 0);
        assert_eq!(Lattice::from_generators(&[(0, -5)]).generators(), vec![(0, 5)]);
    }

    proptest! {
        #[test]
        fn generators_belong_and_reduction_is_canonical(
            gens in prop::collection::vec((-6i64..7, -6i64..7), 0..4),
            v in (-20i64..20, -20i64..20),
        ) {
            let l = Lattice::from_generators(&gens);
            for g in &gens {
                prop_assert!(l.contains(*g));
            }
            let r = l.reduce(v);
            prop_assert!(l.contains((v.0 - r.0, v.1 - r.1)));
            prop_assert_eq!(l.reduce(r), r);
            for g in &gens {
                prop_assert_eq!(l.reduce((v.0 + g.0, v.1 + g.1)), r);
            }
        }
    }
}
