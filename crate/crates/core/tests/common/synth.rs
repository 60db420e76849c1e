//! Deterministic newspaper-like text for timing runs.

use rand::seq::SliceRandom;
use rand::Rng;

const SYLLABLES: &[&str] = &[
    "ber", "gen", "hau", "ko", "lin", "mar", "ner", "ro", "sta", "wi", "ler", "mann", "dor", "fel",
];
const PLACE_SUFFIXES: &[&str] = &["hausen", "ingen", "dorf", "stetten", "weiler", ""];
const NOUNS: &[&str] = &[
    "Strategie",
    "Sorge",
    "Forderung",
    "Regierung",
    "Mindestflughöhe",
    "Vorlage",
    "Debatte",
];
const TITLES: &[&str] = &[
    "Minister",
    "Präsident",
    "Prof.",
    "Herr",
    "Frau",
    "Abgeordnete",
];

fn proper<R: Rng>(rng: &mut R) -> String {
    let n = rng.gen_range(2..=3);
    let mut s: String = (0..n).map(|_| *SYLLABLES.choose(rng).unwrap()).collect();
    s[..1].make_ascii_uppercase();
    s
}

fn place<R: Rng>(rng: &mut R) -> String {
    proper(rng) + PLACE_SUFFIXES.choose(rng).unwrap()
}

fn sentence<R: Rng>(rng: &mut R) -> String {
    let noun = NOUNS.choose(rng).unwrap();
    let title = TITLES.choose(rng).unwrap();
    match rng.gen_range(0..6) {
        0 => format!(
            "{} sagte, die Regierung werde die {noun} prüfen.",
            proper(rng)
        ),
        1 => format!(
            "Der {title} {} kam am Montag aus {}.",
            proper(rng),
            place(rng)
        ),
        2 => format!(
            "Nach Angaben der Polizei flog das Flugzeug bei {} über {}.",
            place(rng),
            place(rng)
        ),
        3 => format!(
            "In {} traf {title} {} den Kollegen {}.",
            place(rng),
            proper(rng),
            proper(rng)
        ),
        4 => format!(
            "Die {noun} wurde in {} ohne Rücksicht beschlossen, so {}.",
            place(rng),
            proper(rng)
        ),
        _ => format!(
            "Der Vorsitzende {} ( SPD ) fragte nach {}s Plänen.",
            proper(rng),
            proper(rng)
        ),
    }
}

/// Documents of roughly 500 words each until `words` whitespace-separated
/// words have been produced.
pub fn corpus<R: Rng>(rng: &mut R, words: usize) -> Vec<(String, String)> {
    let mut docs = Vec::new();
    let mut total = 0;
    while total < words {
        let mut text = String::new();
        let mut in_doc = 0;
        while in_doc < 500 && total + in_doc < words {
            let s = sentence(rng);
            in_doc += s.split_whitespace().count();
            text.push_str(&s);
            text.push(' ');
        }
        total += in_doc;
        docs.push((format!("{}", docs.len() + 1), text));
    }
    docs
}
