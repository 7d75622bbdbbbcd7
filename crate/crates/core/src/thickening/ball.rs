//! Group elements of word length at most `R`, with certified identification.

use super::PatchError;
use crate::words::{free_reduce, ArtinGroup, Budget, Certainty, Letter, Signature, Syllable, Word};
use std::collections::HashMap;

/// Elements in shortlex order of their least representative.
pub(crate) struct Ball {
    pub words: Vec<Word>,
    exact: Option<HashMap<Vec<Syllable>, usize>>,
    buckets: HashMap<Signature, Vec<usize>>,
    budget: Budget,
}

impl Ball {
    fn empty(group: &ArtinGroup, budget: &Budget) -> Self {
        let exact = group.exact_key(&Word::empty()).map(|_| HashMap::new());
        Ball { words: Vec::new(), exact, buckets: HashMap::new(), budget: *budget }
    }

    fn insert(&mut self, group: &ArtinGroup, w: Word) -> usize {
        let i = self.words.len();
        match &mut self.exact {
            Some(map) => {
                map.insert(group.exact_key(&w).unwrap(), i);
            }
            None => self.buckets.entry(group.signature(&w)).or_default().push(i),
        }
        self.words.push(w);
        i
    }

    /// Index of the element `w` represents, `None` if it lies outside.
    pub fn locate(&self, group: &ArtinGroup, w: &Word) -> Result<Option<usize>, PatchError> {
        let w = free_reduce(w);
        if let Some(map) = &self.exact {
            return Ok(map.get(&group.exact_key(&w).unwrap()).copied());
        }
        let Some(bucket) = self.buckets.get(&group.signature(&w)) else {
            return Ok(None);
        };
        for &i in bucket {
            match group.equal_words(&w, &self.words[i], &self.budget)? {
                Certainty::Equal(_) => return Ok(Some(i)),
                Certainty::NotEqual(_) => {}
                Certainty::Unknown(_) => return Err(PatchError::Unresolved(w.render(group.graph()), self.words[i].render(group.graph()))),
            }
        }
        Ok(None)
    }

    pub fn build(group: &ArtinGroup, radius: usize, budget: &Budget) -> Result<Self, PatchError> {
        let mut ball = Ball::empty(group, budget);
        ball.insert(group, Word::empty());
        let n = group.graph().len();
        let mut layer = vec![0usize];
        for len in 1..=radius {
            let mut next = Vec::new();
            for &i in &layer {
                for g in 0..n {
                    for inverse in [false, true] {
                        let l = Letter { generator: g, inverse };
                        let w = ball.words[i].concat(&Word::letter(l));
                        if free_reduce(&w).len() < len || ball.locate(group, &w)?.is_some() {
                            continue;
                        }
                        next.push(ball.insert(group, w));
                    }
                }
            }
            layer = next;
        }
        Ok(ball)
    }

    pub fn len(&self) -> usize {
        self.words.len()
    }
}
