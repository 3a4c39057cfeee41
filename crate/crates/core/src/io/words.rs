//! Group words over element labels: `x4^-1*x5`, `x3x4^2`, `[x5,x4]`, `(ab)^3`, `1`.
//!
//! Atoms are element labels that look like identifiers, plus `g<index>` for
//! raw element indices. Juxtaposed atoms are split greedily, longest label
//! first.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::group::{GroupTable, Subgroup};

pub struct WordParser<'a> {
    g: &'a GroupTable,
    atoms: HashMap<String, usize>,
    whole: HashMap<String, usize>,
    longest: usize,
}

fn is_ident(s: &str) -> bool {
    let mut chars = s.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic() || c == '_')
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

impl<'a> WordParser<'a> {
    pub fn new(g: &'a GroupTable) -> Self {
        let mut atoms = HashMap::new();
        let mut whole = HashMap::new();
        for x in 0..g.order() {
            let l = g.label(x);
            if is_ident(&l) {
                atoms.entry(l.clone()).or_insert(x);
            }
            whole.entry(l).or_insert(x);
        }
        let longest = atoms.keys().map(String::len).max().unwrap_or(0);
        Self { g, atoms, whole, longest }
    }

    /// Evaluates a word; a word equal to some element label (such as the
    /// cycle notation `(1,2,3)`) names that element directly.
    pub fn eval(&self, word: &str) -> Result<usize> {
        if let Some(&x) = self.whole.get(word.trim()) {
            return Ok(x);
        }
        let chars: Vec<char> = word.chars().filter(|c| !c.is_whitespace()).collect();
        let mut pos = 0;
        let x = self.product(&chars, &mut pos)?;
        if pos != chars.len() {
            return Err(Error::MalformedSpec(format!("trailing input in word `{word}`")));
        }
        Ok(x)
    }

    /// Comma separated words.
    pub fn eval_list(&self, words: &str) -> Result<Vec<usize>> {
        split_top_level(words).iter().map(|w| self.eval(w)).collect()
    }

    fn product(&self, s: &[char], pos: &mut usize) -> Result<usize> {
        let mut acc = self.g.identity();
        let mut any = false;
        while *pos < s.len() {
            match s[*pos] {
                '*' => {
                    if !any {
                        return Err(Error::MalformedSpec("word starts with `*`".into()));
                    }
                    *pos += 1;
                }
                ',' | ')' | ']' => break,
                _ => {
                    let f = self.factor(s, pos)?;
                    acc = self.g.mul(acc, f);
                    any = true;
                }
            }
        }
        if !any {
            return Err(Error::MalformedSpec("empty word".into()));
        }
        Ok(acc)
    }

    fn factor(&self, s: &[char], pos: &mut usize) -> Result<usize> {
        let base = match s[*pos] {
            '(' => {
                *pos += 1;
                let x = self.product(s, pos)?;
                self.expect(s, pos, ')')?;
                x
            }
            '[' => {
                *pos += 1;
                let mut acc = self.product(s, pos)?;
                self.expect(s, pos, ',')?;
                loop {
                    let y = self.product(s, pos)?;
                    acc = self.g.commutator(acc, y);
                    if *pos < s.len() && s[*pos] == ',' {
                        *pos += 1;
                    } else {
                        break;
                    }
                }
                self.expect(s, pos, ']')?;
                acc
            }
            '1' => {
                *pos += 1;
                self.g.identity()
            }
            _ => self.atom(s, pos)?,
        };
        if *pos < s.len() && s[*pos] == '^' {
            *pos += 1;
            let e = self.exponent(s, pos)?;
            return Ok(self.g.pow(base, e));
        }
        Ok(base)
    }

    fn exponent(&self, s: &[char], pos: &mut usize) -> Result<i64> {
        let braced = *pos < s.len() && s[*pos] == '{';
        if braced {
            *pos += 1;
        }
        let start = *pos;
        if *pos < s.len() && s[*pos] == '-' {
            *pos += 1;
        }
        while *pos < s.len() && s[*pos].is_ascii_digit() {
            *pos += 1;
        }
        let text: String = s[start..*pos].iter().collect();
        let e = text.parse::<i64>().map_err(|_| Error::MalformedSpec(format!("bad exponent `{text}`")))?;
        if braced {
            self.expect(s, pos, '}')?;
        }
        Ok(e)
    }

    fn atom(&self, s: &[char], pos: &mut usize) -> Result<usize> {
        let rest: String = s[*pos..].iter().take_while(|c| c.is_ascii_alphanumeric() || **c == '_').collect();
        if rest.is_empty() {
            return Err(Error::MalformedSpec(format!("unexpected `{}` in word", s[*pos])));
        }
        for len in (1..=rest.len().min(self.longest.max(1))).rev() {
            if let Some(&x) = self.atoms.get(&rest[..len]) {
                *pos += len;
                return Ok(x);
            }
        }
        if let Some(digits) = rest.strip_prefix('g') {
            let digits: String = digits.chars().take_while(char::is_ascii_digit).collect();
            if let Ok(i) = digits.parse::<usize>() {
                if i < self.g.order() {
                    *pos += 1 + digits.len();
                    return Ok(i);
                }
            }
        }
        Err(Error::MalformedSpec(format!("unknown generator in `{rest}`")))
    }

    fn expect(&self, s: &[char], pos: &mut usize, c: char) -> Result<()> {
        if *pos < s.len() && s[*pos] == c {
            *pos += 1;
            Ok(())
        } else {
            Err(Error::MalformedSpec(format!("expected `{c}` in word")))
        }
    }
}

/// Splits on commas that are not nested in brackets or parentheses.
pub fn split_top_level(s: &str) -> Vec<String> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut cur = String::new();
    for c in s.chars() {
        match c {
            '(' | '[' | '{' => depth += 1,
            ')' | ']' | '}' => depth -= 1,
            ',' if depth == 0 => {
                out.push(std::mem::take(&mut cur));
                continue;
            }
            _ => {}
        }
        cur.push(c);
    }
    if !cur.trim().is_empty() || !out.is_empty() {
        out.push(cur);
    }
    out.into_iter().map(|w| w.trim().to_string()).collect()
}

/// Subgroup generated by comma separated words, e.g. `x4,x5^2,[x5,x4]`.
pub fn subgroup_from_words(g: &GroupTable, words: &str) -> Result<Subgroup> {
    let p = WordParser::new(g);
    let gens = if words.trim().is_empty() { Vec::new() } else { p.eval_list(words)? };
    Ok(g.closure(&gens))
}

/// Checks `lhs = rhs` relations on a table; `rhs` defaults to `1`.
pub fn check_relations(g: &GroupTable, relations: &[&str]) -> Result<()> {
    let p = WordParser::new(g);
    for rel in relations {
        let (lhs, rhs) = rel.split_once('=').unwrap_or((rel, "1"));
        let (l, r) = (p.eval(lhs)?, p.eval(rhs)?);
        if l != r {
            return Err(Error::ConstructionInvalid(format!("relation `{rel}` fails")));
        }
    }
    Ok(())
}

/// `a^2*b` style label from `(name, exponent)` pairs, `1` for the empty word.
pub fn power_word(parts: &[(&str, u64)]) -> String {
    let pieces: Vec<String> = parts
        .iter()
        .filter(|(_, e)| *e != 0)
        .map(|(n, e)| if *e == 1 { n.to_string() } else { format!("{n}^{e}") })
        .collect();
    if pieces.is_empty() {
        "1".into()
    } else {
        pieces.join("*")
    }
}
