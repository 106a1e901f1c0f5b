//! Word-problem oracles for the Coxeter group and the constructed Artin
//! subgroup.
//!
//! Normal forms are the lexicographically least representatives of the
//! commutation class of a fully reduced word. Generators commute exactly
//! when their vertices are adjacent.

use std::collections::BTreeMap;

use crate::fidl::FidlConstruction;
use crate::graph::{Graph, VertexId};
use crate::{Error, Result};

/// A word over the Coxeter generators (each an involution).
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct CoxeterWord(pub Vec<VertexId>);

impl CoxeterWord {
    pub fn render(&self, g: &Graph) -> String {
        self.0
            .iter()
            .map(|&v| g.name(v).to_string())
            .collect::<Vec<_>>()
            .join(" ")
    }
}

/// A signed letter of an Artin word.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ArtinLetter {
    pub vertex: VertexId,
    pub inverse: bool,
}

impl ArtinLetter {
    pub fn gen(vertex: VertexId) -> ArtinLetter {
        ArtinLetter { vertex, inverse: false }
    }

    pub fn inv(vertex: VertexId) -> ArtinLetter {
        ArtinLetter { vertex, inverse: true }
    }

    pub fn inverse_letter(self) -> ArtinLetter {
        ArtinLetter { vertex: self.vertex, inverse: !self.inverse }
    }
}

/// A word over the Artin generators and their inverses.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct ArtinWord(pub Vec<ArtinLetter>);

impl ArtinWord {
    pub fn render(&self, delta: &Graph) -> String {
        self.0
            .iter()
            .map(|l| {
                let mut s = delta.name(l.vertex).to_string();
                if l.inverse {
                    s.push('\'');
                }
                s
            })
            .collect::<Vec<_>>()
            .join(" ")
    }
}

fn check_letters(g: &Graph, w: &CoxeterWord) -> Result<()> {
    for &v in &w.0 {
        if v >= g.vertex_count() {
            return Err(Error::UnknownVertex(format!("#{v}")));
        }
    }
    Ok(())
}

/// Fully reduces a Coxeter word (deleting equal pairs whose intermediate
/// letters all commute with them), then returns the lexicographically
/// least word in its commutation class. Idempotent.
pub fn racg_normal_form(g: &Graph, w: &CoxeterWord) -> Result<CoxeterWord> {
    check_letters(g, w)?;
    let mut letters = w.0.clone();
    'outer: loop {
        for i in 0..letters.len() {
            'candidate: for j in i + 1..letters.len() {
                if letters[j] != letters[i] {
                    continue;
                }
                for k in i + 1..j {
                    if !g.adjacent(letters[k], letters[i]) {
                        continue 'candidate;
                    }
                }
                letters.remove(j);
                letters.remove(i);
                continue 'outer;
            }
        }
        break;
    }
    Ok(CoxeterWord(lex_least_trace(&letters, |a, b| g.adjacent(a, b))))
}

/// Greedy trace-monoid minimization: repeatedly emit the least letter that
/// commutes with everything before it.
fn lex_least_trace<T: Copy + Ord>(letters: &[T], commutes: impl Fn(T, T) -> bool) -> Vec<T> {
    let mut rest: Vec<T> = letters.to_vec();
    let mut out = Vec::with_capacity(rest.len());
    while !rest.is_empty() {
        let mut best: Option<(usize, T)> = None;
        for (i, &l) in rest.iter().enumerate() {
            if rest[..i].iter().all(|&p| commutes(p, l)) {
                match best {
                    Some((_, b)) if b <= l => {}
                    _ => best = Some((i, l)),
                }
            }
        }
        let (i, l) = best.expect("first letter is always movable");
        rest.remove(i);
        out.push(l);
    }
    out
}

/// Whether two Coxeter words represent the same group element.
pub fn racg_equal(g: &Graph, w1: &CoxeterWord, w2: &CoxeterWord) -> Result<bool> {
    Ok(racg_normal_form(g, w1)? == racg_normal_form(g, w2)?)
}

/// Cancels inverse pairs whose intermediates commute, then returns the
/// lexicographically least representative. Letters are ordered by vertex
/// then sign, with the plain generator before its inverse.
pub fn raag_normal_form(delta: &Graph, w: &ArtinWord) -> Result<ArtinWord> {
    for l in &w.0 {
        if l.vertex >= delta.vertex_count() {
            return Err(Error::UnknownVertex(format!("#{}", l.vertex)));
        }
    }
    let mut letters = w.0.clone();
    'outer: loop {
        for i in 0..letters.len() {
            'candidate: for j in i + 1..letters.len() {
                if letters[j] != letters[i].inverse_letter() {
                    continue;
                }
                for k in i + 1..j {
                    if letters[k].vertex != letters[i].vertex
                        && !delta.adjacent(letters[k].vertex, letters[i].vertex)
                    {
                        continue 'candidate;
                    }
                    if letters[k].vertex == letters[i].vertex {
                        // an intermediate copy of the same generator blocks
                        continue 'candidate;
                    }
                }
                letters.remove(j);
                letters.remove(i);
                continue 'outer;
            }
        }
        break;
    }
    let commutes = |a: ArtinLetter, b: ArtinLetter| {
        a.vertex == b.vertex || delta.adjacent(a.vertex, b.vertex)
    };
    Ok(ArtinWord(lex_least_trace(&letters, commutes)))
}

/// Sends each commuting-graph generator `{a,b}` to the length-2 word `a b`
/// (the inverse to `b a`) and concatenates.
pub fn apply_generator_map(fidl: &FidlConstruction, w: &ArtinWord) -> Result<CoxeterWord> {
    let mut out = Vec::with_capacity(w.0.len() * 2);
    for l in &w.0 {
        let (a, b) = *fidl
            .delta_support
            .get(l.vertex)
            .ok_or_else(|| Error::UnknownVertex(format!("#{}", l.vertex)))?;
        if l.inverse {
            out.push(b);
            out.push(a);
        } else {
            out.push(a);
            out.push(b);
        }
    }
    Ok(CoxeterWord(out))
}

/// Outcome of the injectivity sampling run.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum InjectivityOutcome {
    Ok,
    Collision(ArtinWord, ArtinWord),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InjectivityReport {
    pub max_len: usize,
    pub normal_forms: usize,
    pub outcome: InjectivityOutcome,
}

/// Enumerates all Artin normal forms up to `max_len` and checks their
/// images have pairwise distinct Coxeter normal forms. `cap` bounds the
/// enumeration.
pub fn injectivity_sample(
    g: &Graph,
    fidl: &FidlConstruction,
    max_len: usize,
    cap: usize,
) -> Result<InjectivityReport> {
    let delta = &fidl.delta;
    let letters: Vec<ArtinLetter> = (0..delta.vertex_count())
        .flat_map(|v| [ArtinLetter::gen(v), ArtinLetter::inv(v)])
        .collect();

    let mut normal_forms: Vec<ArtinWord> = vec![ArtinWord::default()];
    let mut frontier: Vec<ArtinWord> = vec![ArtinWord::default()];
    for len in 1..=max_len {
        let mut next: Vec<ArtinWord> = Vec::new();
        for w in &frontier {
            for &l in &letters {
                let mut candidate = w.0.clone();
                candidate.push(l);
                let nf = raag_normal_form(delta, &ArtinWord(candidate))?;
                if nf.0.len() == len {
                    next.push(nf);
                }
            }
        }
        next.sort();
        next.dedup();
        normal_forms.extend(next.iter().cloned());
        if normal_forms.len() > cap {
            return Err(Error::ResourceBound(cap));
        }
        frontier = next;
    }

    let mut images: BTreeMap<CoxeterWord, ArtinWord> = BTreeMap::new();
    for w in &normal_forms {
        let image = apply_generator_map(fidl, w)?;
        let image_nf = racg_normal_form(g, &image)?;
        if let Some(prev) = images.get(&image_nf) {
            let (w1, w2) = if prev <= w { (prev.clone(), w.clone()) } else { (w.clone(), prev.clone()) };
            return Ok(InjectivityReport {
                max_len,
                normal_forms: normal_forms.len(),
                outcome: InjectivityOutcome::Collision(w1, w2),
            });
        }
        images.insert(image_nf, w.clone());
    }
    Ok(InjectivityReport {
        max_len,
        normal_forms: normal_forms.len(),
        outcome: InjectivityOutcome::Ok,
    })
}

/// Parity bookkeeping on a Coxeter word: true when the letter count of
/// each color class is even. Image words always satisfy this since every
/// commuting-graph generator contributes two same-colored letters.
pub fn coxeter_color_parity(fidl: &FidlConstruction, w: &CoxeterWord) -> bool {
    let mut counts = [0usize; 2];
    for &v in &w.0 {
        match fidl.coloring.gamma.get(v).copied().flatten() {
            Some(c) => counts[c as usize] += 1,
            None => return false,
        }
    }
    counts[0] % 2 == 0 && counts[1] % 2 == 0
}

/// Parity check for the image of an Artin word.
pub fn color_parity_check(
    _g: &Graph,
    fidl: &FidlConstruction,
    w: &ArtinWord,
) -> Result<bool> {
    let image = apply_generator_map(fidl, w)?;
    Ok(coxeter_color_parity(fidl, &image))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classify::{classify, Classification};
    use crate::fixtures;

    fn fig4_construction() -> (Graph, FidlConstruction) {
        let g = fixtures::by_name("FIG4").unwrap();
        let c = match classify(&g).unwrap() {
            Classification::Yes(c) => *c,
            other => panic!("unexpected {other:?}"),
        };
        (g, c)
    }

    fn w(g: &Graph, names: &[&str]) -> CoxeterWord {
        CoxeterWord(names.iter().map(|n| g.vertex(n).unwrap()).collect())
    }

    #[test]
    fn involution_cancels() {
        let g = fixtures::by_name("FIG4").unwrap();
        let nf = racg_normal_form(&g, &w(&g, &["0", "0"])).unwrap();
        assert!(nf.0.is_empty());
    }

    #[test]
    fn non_commuting_pole_word_stays_long() {
        let g = fixtures::by_name("FIG4").unwrap();
        let nf = racg_normal_form(&g, &w(&g, &["3", "4", "3", "4"])).unwrap();
        assert_eq!(nf.0.len(), 4);
    }

    #[test]
    fn shuffle_then_cancel() {
        let g = fixtures::by_name("FIG4").unwrap();
        let nf = racg_normal_form(&g, &w(&g, &["3", "0", "4", "0"])).unwrap();
        assert_eq!(nf, w(&g, &["3", "4"]));
    }

    #[test]
    fn racg_equal_examples() {
        let g = fixtures::by_name("FIG4").unwrap();
        assert!(!racg_equal(&g, &w(&g, &["3", "4"]), &w(&g, &["4", "3"])).unwrap());
        assert!(racg_equal(&g, &w(&g, &["0", "3"]), &w(&g, &["3", "0"])).unwrap());
        assert!(racg_equal(&g, &CoxeterWord::default(), &w(&g, &["5", "5"])).unwrap());
    }

    #[test]
    fn racg_normal_form_is_idempotent() {
        let g = fixtures::by_name("FIG4").unwrap();
        let word = w(&g, &["8", "3", "0", "3", "8", "5"]);
        let nf = racg_normal_form(&g, &word).unwrap();
        assert_eq!(racg_normal_form(&g, &nf).unwrap(), nf);
    }

    #[test]
    fn raag_inverse_pair_cancels() {
        let (_, c) = fig4_construction();
        let x = ArtinWord(vec![ArtinLetter::gen(0), ArtinLetter::inv(0)]);
        assert!(raag_normal_form(&c.delta, &x).unwrap().0.is_empty());
    }

    #[test]
    fn raag_commuting_pair_sorts() {
        let (_, c) = fig4_construction();
        let x34 = c.delta.vertex("3_4").unwrap();
        let x08 = c.delta.vertex("0_8").unwrap();
        assert!(c.delta.adjacent(x34, x08));
        let word = ArtinWord(vec![ArtinLetter::gen(x34), ArtinLetter::gen(x08)]);
        let nf = raag_normal_form(&c.delta, &word).unwrap();
        assert_eq!(nf.0, vec![ArtinLetter::gen(x08), ArtinLetter::gen(x34)]);
    }

    #[test]
    fn raag_non_adjacent_pair_is_stuck() {
        let (_, c) = fig4_construction();
        let x35 = c.delta.vertex("3_5").unwrap();
        let x36 = c.delta.vertex("3_6").unwrap();
        assert!(!c.delta.adjacent(x35, x36));
        let word = ArtinWord(vec![ArtinLetter::gen(x36), ArtinLetter::gen(x35)]);
        let nf = raag_normal_form(&c.delta, &word).unwrap();
        assert_eq!(nf, word);
    }

    #[test]
    fn generator_map_examples() {
        let (g, c) = fig4_construction();
        let x34 = c.delta.vertex("3_4").unwrap();
        let image = apply_generator_map(&c, &ArtinWord(vec![ArtinLetter::gen(x34)])).unwrap();
        assert_eq!(image, w(&g, &["3", "4"]));
        let image_inv = apply_generator_map(&c, &ArtinWord(vec![ArtinLetter::inv(x34)])).unwrap();
        assert_eq!(image_inv, w(&g, &["4", "3"]));
        let x08 = c.delta.vertex("0_8").unwrap();
        let image2 =
            apply_generator_map(&c, &ArtinWord(vec![ArtinLetter::gen(x08), ArtinLetter::gen(x34)]))
                .unwrap();
        assert_eq!(image2, w(&g, &["0", "8", "3", "4"]));
    }

    #[test]
    fn generator_images_have_infinite_order() {
        let (g, c) = fig4_construction();
        for v in 0..c.delta.vertex_count() {
            let sq = ArtinWord(vec![ArtinLetter::gen(v), ArtinLetter::gen(v)]);
            let image = apply_generator_map(&c, &sq).unwrap();
            let nf = racg_normal_form(&g, &image).unwrap();
            assert_eq!(nf.0.len(), 4, "generator {} squared must not collapse", c.delta.name(v));
        }
    }

    #[test]
    fn homomorphism_soundness_on_delta_edges() {
        let (g, c) = fig4_construction();
        for (u, v) in c.delta.edges() {
            let uv = apply_generator_map(&c, &ArtinWord(vec![ArtinLetter::gen(u), ArtinLetter::gen(v)]))
                .unwrap();
            let vu = apply_generator_map(&c, &ArtinWord(vec![ArtinLetter::gen(v), ArtinLetter::gen(u)]))
                .unwrap();
            assert!(racg_equal(&g, &uv, &vu).unwrap());
        }
    }

    #[test]
    fn injectivity_sample_len_zero_is_vacuous() {
        let (g, c) = fig4_construction();
        let report = injectivity_sample(&g, &c, 0, 1_000_000).unwrap();
        assert_eq!(report.normal_forms, 1);
        assert_eq!(report.outcome, InjectivityOutcome::Ok);
    }

    #[test]
    fn corrupted_generator_map_collides() {
        let (g, mut c) = fig4_construction();
        // send the central generator to an involution square: 3_4 -> 3 3
        let x34 = c.delta.vertex("3_4").unwrap();
        c.delta_support[x34] = (g.vertex("3").unwrap(), g.vertex("3").unwrap());
        let report = injectivity_sample(&g, &c, 2, 1_000_000).unwrap();
        match report.outcome {
            InjectivityOutcome::Collision(w1, _) => {
                assert!(w1.0.is_empty(), "empty word should collide first");
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn parity_examples() {
        let (g, c) = fig4_construction();
        let x34 = c.delta.vertex("3_4").unwrap();
        assert!(color_parity_check(&g, &c, &ArtinWord(vec![ArtinLetter::gen(x34)])).unwrap());
        assert!(!coxeter_color_parity(&c, &w(&g, &["3"])));
        let word = ArtinWord(vec![
            ArtinLetter::gen(x34),
            ArtinLetter::inv(c.delta.vertex("0_8").unwrap()),
            ArtinLetter::gen(c.delta.vertex("3_5").unwrap()),
        ]);
        assert!(color_parity_check(&g, &c, &word).unwrap());
    }
}
