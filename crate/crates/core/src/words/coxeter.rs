//! Word problem in the Coxeter quotient `W_Γ` by Tits' rewriting: a word is
//! reduced iff no braid-equivalent word contains a square, and reduced words
//! of one element are braid-equivalent.

use super::{Letter, Word};
use crate::graph::PresentationGraph;
use std::collections::HashSet;

/// All words reachable from `w` by braid moves `Π(a,b;m) ↔ Π(b,a;m)`, in BFS
/// order. `None` when more than `cap` words are found.
fn braid_class(g: &PresentationGraph, w: &[usize], cap: usize) -> Option<Vec<Vec<usize>>> {
    let mut seen: HashSet<Vec<usize>> = HashSet::new();
    seen.insert(w.to_vec());
    let mut order = vec![w.to_vec()];
    let mut head = 0;
    while head < order.len() {
        let cur = order[head].clone();
        head += 1;
        for i in 0..cur.len() {
            let a = cur[i];
            for b in g.neighbors(a) {
                let m = g.label(a, b).unwrap() as usize;
                if i + m > cur.len() {
                    continue;
                }
                let alternating = (0..m).all(|k| cur[i + k] == if k % 2 == 0 { a } else { b });
                if !alternating {
                    continue;
                }
                let mut next = cur.clone();
                for k in 0..m {
                    next[i + k] = if k % 2 == 0 { b } else { a };
                }
                if seen.insert(next.clone()) {
                    if seen.len() > cap {
                        return None;
                    }
                    order.push(next);
                }
            }
        }
    }
    Some(order)
}

/// Reduced word for the image of `w` in `W_Γ`, as the lexicographically least
/// word in its braid class; `None` if some braid class exceeds `cap` words.
pub(crate) fn coxeter_reduce_capped(g: &PresentationGraph, w: &Word, cap: usize) -> Option<Vec<usize>> {
    let mut reduced: Vec<usize> = Vec::new();
    for l in w.letters() {
        let a = l.generator;
        if reduced.last() == Some(&a) {
            reduced.pop();
            continue;
        }
        let class = braid_class(g, &reduced, cap)?;
        match class.into_iter().find(|x| x.last() == Some(&a)) {
            Some(mut x) => {
                x.pop();
                reduced = x;
            }
            None => reduced.push(a),
        }
    }
    braid_class(g, &reduced, cap)?.into_iter().min()
}

/// Canonical reduced word (positive letters) for the image of `w` in `W_Γ`.
pub fn coxeter_reduce(g: &PresentationGraph, w: &Word) -> Word {
    let r = coxeter_reduce_capped(g, w, usize::MAX).expect("uncapped");
    Word(r.into_iter().map(Letter::pos).collect())
}

/// Whether `w` maps to the identity of the Coxeter group.
pub fn coxeter_trivial(g: &PresentationGraph, w: &Word) -> bool {
    coxeter_reduce(g, w).is_empty()
}
