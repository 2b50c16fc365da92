use std::panic::{catch_unwind, AssertUnwindSafe};

use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};

use super::{Report, VerifyConfig};
use crate::equations::enumerate_elements;
use crate::isometry::{Coset, Isometry};
use crate::orders::{commute_eps, Clause, Eps};
use crate::wordlang::{eval_str, format, parse};
use crate::zerotop::ZElem;

/// Characters that never occur in a valid word.
const FOREIGN: &[char] = &['!', '#', '%', '?', 'x', 'q', '*', '"', '~', 'é'];
/// The alphabet of valid words, for unconstrained random strings.
const ALPHABET: &[char] = &[
    'a', 'b', 'I', 'Z', 'e', 'p', 's', '(', ')', '[', '{', '}', 'A', '=', ';', 'n', '0', '1', '2',
    '9', '^', ',', ' ',
];

fn corrupt(rng: &mut StdRng, word: &str) -> String {
    let chars: Vec<char> = word.chars().collect();
    match rng.gen_range(0..4) {
        0 => format!("{word}^"),
        1 => format!("({word}"),
        2 => format!("{word})"),
        _ => {
            let at = rng.gen_range(0..=chars.len());
            let mut out: String = chars[..at].iter().collect();
            out.push(*FOREIGN.choose(rng).expect("nonempty"));
            out.extend(&chars[at..]);
            out
        }
    }
}

pub(super) fn parser(cfg: &VerifyConfig, r: &mut Report) {
    let pool = enumerate_elements(cfg.bounds);
    let mut words = Vec::with_capacity(pool.len() + 1);
    for x in pool.into_iter().map(ZElem::Elem).chain([ZElem::Zero]) {
        let text = format(&x);
        r.check(eval_str(&text).as_ref() == Ok(&x), || {
            format!("`{text}` does not evaluate back")
        });
        words.push(text);
    }

    let same = |l: &str, w: &str| matches!((eval_str(l), eval_str(w)), (Ok(x), Ok(y)) if x == y);
    r.check(same("a b", "I"), || "`a b` ≠ `I`".into());
    r.check(!same("b a", "I"), || "`b a` = `I`".into());
    r.check(eval_str("Z a^5") == Ok(ZElem::Zero), || {
        "zero does not absorb".into()
    });
    const MAX_EXP: u64 = 6;
    for k in 0..=MAX_EXP {
        for l in 0..=MAX_EXP {
            for m in 0..=MAX_EXP {
                for n in 0..=MAX_EXP {
                    let t = l.min(m);
                    let lhs = format!("b^{k} a^{l} b^{m} a^{n}");
                    let rhs = format!("b^{} a^{}", k + m - t, l + n - t);
                    r.check(same(&lhs, &rhs), || format!("`{lhs}` ≠ `{rhs}`"));
                }
            }
        }
    }
    for coset in Coset::all_up_to(5) {
        for i in 0..=3 {
            for clause in Clause::ALL {
                for p in 0..=3 {
                    if let Ok(rw) = commute_eps(clause, p, &Eps::new(coset.clone(), i)) {
                        let (lhs, rhs) = rw.words();
                        r.check(same(&lhs, &rhs), || format!("`{lhs}` ≠ `{rhs}`"));
                    }
                }
            }
        }
    }
    let g = Isometry::alpha().compose(&Isometry::epsilon(&[1], 3, 1).expect("valid coset"));
    r.check(
        eval_str(&g.to_string()) == Ok(ZElem::Elem(g.clone())),
        || format!("`{g}` does not evaluate back"),
    );

    let mut rng = StdRng::seed_from_u64(cfg.seed);
    for _ in 0..cfg.fuzz {
        let word = words.choose(&mut rng).expect("nonempty pool");
        let bad = corrupt(&mut rng, word);
        let outcome = catch_unwind(AssertUnwindSafe(|| parse(&bad).is_err()));
        r.check(matches!(outcome, Ok(true)), || {
            format!("`{bad}` was not rejected cleanly")
        });
    }
    let mut accepted = 0;
    for _ in 0..cfg.fuzz {
        let len = rng.gen_range(0..24);
        let text: String = (0..len)
            .map(|_| *ALPHABET.choose(&mut rng).expect("nonempty"))
            .collect();
        let outcome = catch_unwind(AssertUnwindSafe(|| eval_str(&text).is_ok()));
        if matches!(outcome, Ok(true)) {
            accepted += 1;
        }
        r.check(outcome.is_ok(), || format!("`{text}` panicked"));
    }
    r.note(format!(
        "{} corrupted words rejected, {accepted} of {} random strings happened to be valid",
        cfg.fuzz, cfg.fuzz
    ));
}
