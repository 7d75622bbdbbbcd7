use crate::automorphism::OuterClass;
use crate::graph::PresentationGraph;
use crate::words::{pi_word, Letter, Word};
use serde::{Deserialize, Serialize};

/// `A_Γ ⋊ ⟨x⟩` with `x s x⁻¹ = ψ(s)`, optionally with `x^k = 1`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExtensionPresentation {
    pub generators: Vec<String>,
    pub fresh: String,
    pub relations: Vec<String>,
    pub order: Option<u64>,
}

/// `x`, or `x1`, `x2`, … if the name is taken.
fn fresh_name(g: &PresentationGraph) -> String {
    if g.index_of("x").is_none() {
        return "x".to_string();
    }
    (1..).map(|i| format!("x{i}")).find(|n| g.index_of(n).is_none()).unwrap()
}

pub fn build_extension(g: &PresentationGraph, psi: &OuterClass, finite_order: bool) -> ExtensionPresentation {
    let x = fresh_name(g);
    let mut relations = Vec::new();
    for (a, b, m) in g.edges() {
        let lhs = pi_word(a, b, m as usize).unwrap();
        let rhs = pi_word(b, a, m as usize).unwrap();
        relations.push(format!("{} = {}", lhs.render(g), rhs.render(g)));
    }
    let order = finite_order.then(|| psi.order());
    if let Some(k) = order {
        relations.push(format!("{x}^{k} = 1"));
    }
    let auto = psi.to_automorphism();
    for s in 0..g.len() {
        let image = auto.apply(&Word::letter(Letter::pos(s)));
        relations.push(format!("{x} {} {x}^-1 = {}", g.name(s), image.render(g)));
    }
    let mut generators = g.names().to_vec();
    generators.push(x.clone());
    ExtensionPresentation { generators, fresh: x, relations, order }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Permutation;

    #[test]
    fn inversion_on_edge() {
        let g = PresentationGraph::new(&["s", "t"], &[("s", "t", 3)]).unwrap();
        let iota = OuterClass { perm: Permutation::identity(2), inverted: true };
        let e = build_extension(&g, &iota, true);
        assert_eq!(e.generators, vec!["s", "t", "x"]);
        assert_eq!(e.relations, vec!["s t s = t s t", "x^2 = 1", "x s x^-1 = s^-1", "x t x^-1 = t^-1"]);
    }

    #[test]
    fn identity_gives_degenerate_order() {
        let g = PresentationGraph::new(&["s", "t"], &[("s", "t", 3)]).unwrap();
        let e = build_extension(&g, &OuterClass::identity(2), true);
        assert_eq!(e.order, Some(1));
        assert!(e.relations.contains(&"x^1 = 1".to_string()));
        assert!(!build_extension(&g, &OuterClass::identity(2), false).relations.iter().any(|r| r.contains("= 1")));
    }

    #[test]
    fn rotation_and_clash() {
        let g = PresentationGraph::new(&["x", "y", "z"], &[("x", "y", 3), ("y", "z", 3), ("x", "z", 3)]).unwrap();
        let rot = OuterClass { perm: Permutation::from_images(vec![1, 2, 0]), inverted: false };
        let e = build_extension(&g, &rot, true);
        assert_eq!(e.fresh, "x1");
        assert!(e.relations.contains(&"x1^3 = 1".to_string()));
        assert!(e.relations.contains(&"x1 x x1^-1 = y".to_string()));
    }
}
