use crate::groups::{GroupElement, GroupOrder, Splitting};

/// Subalgebras spanned by a set of d_x.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TriangularPart {
    /// Vir[G]⁺: x ≻ 0.
    Plus(GroupOrder),
    /// Vir[G]⁻: x ≺ 0.
    Minus(GroupOrder),
    /// Vir[G]₊: x = u + k·b with k ≥ 0 (C is also in this part).
    PlusLevel(Splitting),
    /// Vir[G]₊₊: k ≥ 1.
    StrictPlusLevel(Splitting),
}

/// Whether d_x lies in the given part.
pub fn part_membership(x: &GroupElement, part: &TriangularPart) -> bool {
    match part {
        TriangularPart::Plus(o) => o.is_positive(x),
        TriangularPart::Minus(o) => o.is_positive(&-x),
        TriangularPart::PlusLevel(s) => s.level(x) >= 0,
        TriangularPart::StrictPlusLevel(s) => s.level(x) >= 1,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::Group;

    #[test]
    fn level_parts() {
        let g = Group::with_rank(2).unwrap();
        let s = g.split(&GroupElement(vec![0, 1])).unwrap();
        let plus = TriangularPart::PlusLevel(s.clone());
        let strict = TriangularPart::StrictPlusLevel(s.clone());
        let b = s.b().clone();
        assert!(part_membership(&b, &strict));
        let x = GroupElement(vec![3, 0]);
        assert!(part_membership(&x, &plus) && !part_membership(&x, &strict));
        let mb = -&b;
        assert!(!part_membership(&mb, &plus) && !part_membership(&mb, &strict));
    }

    #[test]
    fn order_parts() {
        let o = GroupOrder::Lexicographic;
        let x = GroupElement(vec![0, 1]);
        assert!(part_membership(&x, &TriangularPart::Plus(o.clone())));
        assert!(part_membership(&-&x, &TriangularPart::Minus(o.clone())));
        assert!(!part_membership(&GroupElement(vec![0, 0]), &TriangularPart::Plus(o)));
    }
}
