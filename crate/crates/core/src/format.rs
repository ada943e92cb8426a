//! The line-based `.aut` text format.
//!
//! ```text
//! # (ab)+
//! alphabet: a b
//! states: 3
//! initial: 0
//! final: 2
//! trans: 0 a 1
//! trans: 1 b 2
//! trans: 2 a 1
//! ```
//!
//! `alphabet` and `states` must appear exactly once, before any other
//! section. `initial` and `final` may be repeated (their states accumulate)
//! or omitted (empty set). Everything after `#` on a line is ignored.
//! Serialization emits the sections in the order above with transitions
//! sorted by `(source, token, target)`.

use std::fmt::Write;

use crate::alphabet::Letter;
use crate::automaton::{Automaton, Edge, State};
use crate::error::{Error, Result};

pub fn parse_automaton(text: &str) -> Result<Automaton> {
    let mut alphabet: Option<Vec<Letter>> = None;
    let mut num_states: Option<usize> = None;
    let mut initial = Vec::new();
    let mut finals = Vec::new();
    let mut edges = Vec::new();

    for (number, raw) in text.lines().enumerate() {
        let line = number + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let syntax = |message: String| Error::Syntax { line, message };
        let (key, rest) = content
            .split_once(':')
            .ok_or_else(|| syntax(format!("expected `<section>: ...`, found {content:?}")))?;
        let key = key.trim();
        let fields: Vec<&str> = rest.split_whitespace().collect();

        if key != "alphabet" && key != "states" && (alphabet.is_none() || num_states.is_none()) {
            return Err(syntax(format!(
                "section `{key}` before `alphabet` and `states` are declared"
            )));
        }
        let parse_state = |field: &str| -> Result<State> {
            let state: usize = field
                .parse()
                .map_err(|_| syntax(format!("invalid state {field:?}")))?;
            let states = num_states.unwrap_or(0);
            if state >= states {
                return Err(Error::StateOutOfRange {
                    line,
                    state,
                    states,
                });
            }
            Ok(state)
        };

        match key {
            "alphabet" => {
                if alphabet.is_some() {
                    return Err(syntax("duplicate `alphabet` section".into()));
                }
                let mut letters = Vec::with_capacity(fields.len());
                for field in &fields {
                    letters.push(Letter::new(field).map_err(|e| syntax(e.to_string()))?);
                }
                letters.sort();
                if letters.windows(2).any(|w| w[0] == w[1]) {
                    return Err(syntax("duplicate letter in alphabet".into()));
                }
                alphabet = Some(letters);
            }
            "states" => {
                if num_states.is_some() {
                    return Err(syntax("duplicate `states` section".into()));
                }
                let [count] = fields.as_slice() else {
                    return Err(syntax("`states` takes exactly one count".into()));
                };
                num_states = Some(
                    count
                        .parse()
                        .map_err(|_| syntax(format!("invalid state count {count:?}")))?,
                );
            }
            "initial" => {
                for field in &fields {
                    initial.push(parse_state(field)?);
                }
            }
            "final" => {
                for field in &fields {
                    finals.push(parse_state(field)?);
                }
            }
            "trans" => {
                let [src, token, dst] = fields.as_slice() else {
                    return Err(syntax("`trans` takes `<source> <letter> <target>`".into()));
                };
                let src = parse_state(src)?;
                let dst = parse_state(dst)?;
                let letters = alphabet.as_ref().expect("checked above");
                let letter = letters
                    .iter()
                    .position(|l| l.as_str() == *token)
                    .ok_or_else(|| Error::UndeclaredLetter {
                        line,
                        letter: token.to_string(),
                    })?;
                edges.push(Edge { src, letter, dst });
            }
            other => return Err(syntax(format!("unknown section `{other}`"))),
        }
    }

    let line = text.lines().count().max(1);
    let alphabet = alphabet.ok_or_else(|| Error::Syntax {
        line,
        message: "missing `alphabet` section".into(),
    })?;
    let num_states = num_states.ok_or_else(|| Error::Syntax {
        line,
        message: "missing `states` section".into(),
    })?;
    Ok(Automaton::from_parts(
        alphabet, num_states, initial, finals, edges,
    ))
}

pub fn serialize(a: &Automaton) -> String {
    let mut out = String::new();
    let join = |items: &mut dyn Iterator<Item = String>| items.collect::<Vec<_>>().join(" ");
    let header = |key: &str, body: String| {
        if body.is_empty() {
            format!("{key}:\n")
        } else {
            format!("{key}: {body}\n")
        }
    };
    out.push_str(&header(
        "alphabet",
        join(&mut a.alphabet().iter().map(|l| l.to_string())),
    ));
    out.push_str(&header("states", a.num_states().to_string()));
    out.push_str(&header(
        "initial",
        join(&mut a.initial_states().iter().map(|q| q.to_string())),
    ));
    out.push_str(&header(
        "final",
        join(&mut a.final_states().iter().map(|q| q.to_string())),
    ));
    for (src, letter, dst) in a.transitions() {
        let _ = writeln!(out, "trans: {src} {letter} {dst}");
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::alphabet::Word;

    #[test]
    fn smallest_loop_automaton() {
        let a =
            parse_automaton("alphabet: a\nstates: 1\ninitial: 0\nfinal: 0\ntrans: 0 a 0").unwrap();
        assert_eq!(a.num_states(), 1);
        assert!(a.accepts(&Word::from_chars("aaaa").unwrap()).unwrap());
    }

    #[test]
    fn undeclared_letter() {
        let err = parse_automaton("alphabet: a\nstates: 1\ninitial: 0\nfinal: 0\ntrans: 0 b 0")
            .unwrap_err();
        assert_eq!(
            err,
            Error::UndeclaredLetter {
                line: 5,
                letter: "b".into()
            }
        );
    }

    #[test]
    fn state_out_of_range() {
        let err = parse_automaton("alphabet: a\nstates: 1\ninitial: 0\nfinal: 1").unwrap_err();
        assert_eq!(
            err,
            Error::StateOutOfRange {
                line: 4,
                state: 1,
                states: 1
            }
        );
    }

    #[test]
    fn syntax_errors_carry_line_numbers() {
        let cases = [
            ("alphabet: a\nstates: x", 2),
            ("alphabet: a\nstates: 1\nbogus line", 3),
            ("alphabet: a\nstates: 1\ntrans: 0 a", 3),
            ("states: 1\ninitial: 0\nalphabet: a", 2),
            ("alphabet: a a\nstates: 1", 1),
            ("alphabet: a\nalphabet: b\nstates: 1", 2),
            ("alphabet: a\nstates: 1\nfoo: 1", 3),
        ];
        for (text, expected) in cases {
            match parse_automaton(text) {
                Err(Error::Syntax { line, .. }) => assert_eq!(line, expected, "{text:?}"),
                other => panic!("expected syntax error for {text:?}, got {other:?}"),
            }
        }
        assert!(matches!(
            parse_automaton("alphabet: a"),
            Err(Error::Syntax { .. })
        ));
    }

    #[test]
    fn comments_blank_lines_and_repeated_sections() {
        let text = "# header\n\nalphabet: b a   # two letters\nstates: 3\n\
                    initial: 0\ninitial: 1\nfinal:\ntrans: 1 b 2\ntrans: 0 a 1\n";
        let a = parse_automaton(text).unwrap();
        assert_eq!(a.initial_states(), &[0, 1]);
        assert!(a.final_states().is_empty());
        assert_eq!(
            serialize(&a),
            "alphabet: a b\nstates: 3\ninitial: 0 1\nfinal:\ntrans: 0 a 1\ntrans: 1 b 2\n"
        );
    }

    #[test]
    fn serialization_is_a_fixpoint() {
        let text = "alphabet: b a\nstates: 2\nfinal: 1\ninitial: 0\ntrans: 1 b 0\ntrans: 0 a 1\ntrans: 0 a 1";
        let once = serialize(&parse_automaton(text).unwrap());
        let twice = serialize(&parse_automaton(&once).unwrap());
        assert_eq!(once, twice);
    }
}
