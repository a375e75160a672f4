//! Group specification files.
//!
//! ```text
//! # comments start with '#' or ';'
//! [group]
//! kind = zm_semidirect
//! n = 5
//! s = 3
//! t_order = inf
//! letters = a x
//!
//! [genset]
//! u = a x
//! v = x a
//! ```
//!
//! Kinds and their keys:
//!
//! * `table`: `builtin = q8 | s3 | cyclic N`, or `file = PATH` in the table
//!   export format.
//! * `presentation`: `generators = a b`, one `relator = WORD` line per
//!   relator, optional `cap` (default 20000). Enumerated to a table.
//! * `zn_c2`: `n`, `phi = invert i | swap i j`.
//! * `bs12`: no keys.
//! * `zm_semidirect`: `n`, `s`, `t_order = M | inf`, optional `letters = A T`.
//! * `product`: `left = PATH`, `right = PATH` (group files).
//! * `extension`: `fiber = PATH` (a finite group file), `rank = R`, and
//!   optional `action1 … actionR` as cycles over fiber element names, e.g.
//!   `action1 = (g g^2)`. Missing actions are trivial.
//!
//! Paths are relative to the directory of the file that names them.

use std::path::{Path, PathBuf};

use super::{
    coset_enumerate, AnyEngine, BS12Engine, ExtensionEngine, FiniteGroupTable, GroupError, Phi, Presentation,
    ProductEngine, TOrder, ZmSemidirectEngine, ZnC2Engine,
};

pub const DEFAULT_COSET_CAP: usize = 20_000;

/// One `[section]` with its `key = value` lines in file order.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Section {
    pub name: String,
    pub entries: Vec<(String, String)>,
}

impl Section {
    pub fn get(&self, key: &str) -> Option<&str> {
        self.entries.iter().find(|(k, _)| k == key).map(|(_, v)| v.as_str())
    }

    pub fn all<'a>(&'a self, key: &'a str) -> impl Iterator<Item = &'a str> + 'a {
        self.entries.iter().filter(move |(k, _)| k == key).map(|(_, v)| v.as_str())
    }

    fn require(&self, key: &str) -> Result<&str, GroupError> {
        self.get(key).ok_or_else(|| GroupError::File(format!("[{}] is missing `{key}`", self.name)))
    }

    fn parse<T: std::str::FromStr>(&self, key: &str) -> Result<T, GroupError> {
        let v = self.require(key)?;
        v.parse().map_err(|_| GroupError::File(format!("[{}] `{key}` has bad value `{v}`", self.name)))
    }
}

pub fn parse_sections(text: &str) -> Result<Vec<Section>, GroupError> {
    let mut out: Vec<Section> = Vec::new();
    for (no, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') || line.starts_with(';') {
            continue;
        }
        if let Some(name) = line.strip_prefix('[').and_then(|l| l.strip_suffix(']')) {
            out.push(Section { name: name.trim().to_string(), entries: Vec::new() });
            continue;
        }
        let (k, v) = line
            .split_once('=')
            .ok_or_else(|| GroupError::File(format!("line {}: expected `key = value`", no + 1)))?;
        let section = out.last_mut().ok_or_else(|| GroupError::File(format!("line {}: entry before any section", no + 1)))?;
        section.entries.push((k.trim().to_string(), v.trim().to_string()));
    }
    Ok(out)
}

/// A loaded group file: the engine and the declared generating set as
/// `(letter name, word over builtin letters)` pairs.
#[derive(Debug, Clone)]
pub struct GroupFile {
    pub engine: AnyEngine,
    pub genset: Vec<(String, String)>,
}

pub fn load_group_file(path: &Path) -> Result<GroupFile, GroupError> {
    let text = std::fs::read_to_string(path).map_err(|e| GroupError::File(format!("{}: {e}", path.display())))?;
    parse_group_file(&text, path.parent())
}

pub fn parse_group_file(text: &str, base: Option<&Path>) -> Result<GroupFile, GroupError> {
    let sections = parse_sections(text)?;
    let group = sections
        .iter()
        .find(|s| s.name == "group")
        .ok_or_else(|| GroupError::File("missing [group] section".into()))?;
    let engine = build_engine(group, base)?;
    let genset = sections.iter().filter(|s| s.name == "genset").flat_map(|s| s.entries.iter().cloned()).collect();
    Ok(GroupFile { engine, genset })
}

fn resolve(base: Option<&Path>, rel: &str) -> PathBuf {
    match base {
        Some(b) => b.join(rel),
        None => PathBuf::from(rel),
    }
}

/// Reads the presentation from a `[presentation]` section, or a `[group]`
/// section of kind `presentation`. Returns it with its coset cap.
pub fn parse_presentation(text: &str) -> Result<(Presentation, usize), GroupError> {
    let sections = parse_sections(text)?;
    let s = sections
        .iter()
        .find(|s| s.name == "presentation" || (s.name == "group" && s.get("kind") == Some("presentation")))
        .ok_or_else(|| GroupError::File("missing [presentation] section".into()))?;
    presentation_of(s)
}

fn presentation_of(s: &Section) -> Result<(Presentation, usize), GroupError> {
    let gens: Vec<&str> = s.require("generators")?.split_whitespace().collect();
    let relators: Vec<&str> = s.all("relator").collect();
    let cap = match s.get("cap") {
        Some(_) => s.parse("cap")?,
        None => DEFAULT_COSET_CAP,
    };
    Ok((Presentation::new(&gens, &relators)?, cap))
}

fn build_engine(s: &Section, base: Option<&Path>) -> Result<AnyEngine, GroupError> {
    match s.require("kind")? {
        "table" => Ok(AnyEngine::Table(build_table(s, base)?)),
        "presentation" => {
            let (p, cap) = presentation_of(s)?;
            Ok(AnyEngine::Table(coset_enumerate(&p, cap)?))
        }
        "zn_c2" => {
            let n: usize = s.parse("n")?;
            let phi_text = s.require("phi")?;
            let phi = Phi::parse(phi_text).ok_or_else(|| GroupError::File(format!("bad phi `{phi_text}`")))?;
            Ok(AnyEngine::ZnC2(ZnC2Engine::new(n, phi)?))
        }
        "bs12" => Ok(AnyEngine::Bs12(BS12Engine::new())),
        "zm_semidirect" => {
            let n: u64 = s.parse("n")?;
            let sm: u64 = s.parse("s")?;
            let t_order = match s.require("t_order")? {
                "inf" => TOrder::Infinite,
                _ => TOrder::Finite(s.parse("t_order")?),
            };
            let letters: Vec<&str> = s.get("letters").unwrap_or("a t").split_whitespace().collect();
            let [a, t] = letters[..] else {
                return Err(GroupError::File("`letters` needs exactly two names".into()));
            };
            Ok(AnyEngine::Zm(ZmSemidirectEngine::with_names(n, sm, t_order, a, t)?))
        }
        "product" => {
            let left = load_group_file(&resolve(base, s.require("left")?))?.engine;
            let right = load_group_file(&resolve(base, s.require("right")?))?.engine;
            Ok(AnyEngine::Product(Box::new(ProductEngine::new(left, right)?)))
        }
        "extension" => {
            let fiber = load_group_file(&resolve(base, s.require("fiber")?))?.engine;
            let AnyEngine::Table(h) = fiber else {
                return Err(GroupError::File("extension fiber must be a finite group".into()));
            };
            let rank: usize = s.parse("rank")?;
            let actions = (1..=rank)
                .map(|k| match s.get(&format!("action{k}")) {
                    Some(c) => parse_cycles(c, &h),
                    None => Ok((0..h.order()).collect()),
                })
                .collect::<Result<Vec<_>, _>>()?;
            Ok(AnyEngine::Extension(ExtensionEngine::new(h, actions)?))
        }
        other => Err(GroupError::File(format!("unknown kind `{other}`"))),
    }
}

fn build_table(s: &Section, base: Option<&Path>) -> Result<FiniteGroupTable, GroupError> {
    if let Some(b) = s.get("builtin") {
        return builtin_table(b);
    }
    let path = resolve(base, s.require("file")?);
    let text = std::fs::read_to_string(&path).map_err(|e| GroupError::File(format!("{}: {e}", path.display())))?;
    FiniteGroupTable::from_text(&text)
}

/// `q8`, `s3` or `cyclic N`.
pub fn builtin_table(name: &str) -> Result<FiniteGroupTable, GroupError> {
    let toks: Vec<&str> = name.split_whitespace().collect();
    match toks[..] {
        ["q8"] => Ok(FiniteGroupTable::quaternion()),
        ["s3"] => FiniteGroupTable::from_permutations(&[("a", vec![1, 0, 2]), ("b", vec![0, 2, 1])]),
        ["cyclic", n] => match n.parse::<usize>() {
            Ok(n) if n > 0 => Ok(FiniteGroupTable::cyclic(n)),
            _ => Err(GroupError::File(format!("bad cyclic order `{n}`"))),
        },
        _ => Err(GroupError::File(format!("unknown builtin table `{name}`"))),
    }
}

/// Parses `(x y z)(u v)` over element names into an element permutation.
pub fn parse_cycles(text: &str, h: &FiniteGroupTable) -> Result<Vec<usize>, GroupError> {
    let mut perm: Vec<usize> = (0..h.order()).collect();
    let mut rest = text.trim();
    while !rest.is_empty() {
        let body = rest
            .strip_prefix('(')
            .and_then(|r| r.split_once(')'))
            .ok_or_else(|| GroupError::File(format!("bad cycle notation `{text}`")))?;
        let elems = body
            .0
            .split_whitespace()
            .map(|n| h.element(n).ok_or_else(|| GroupError::File(format!("unknown element `{n}`"))))
            .collect::<Result<Vec<_>, _>>()?;
        for (i, &x) in elems.iter().enumerate() {
            perm[x] = elems[(i + 1) % elems.len()];
        }
        rest = body.1.trim_start();
    }
    Ok(perm)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::{evaluate_text, GroupEngine};

    #[test]
    fn zm_file() {
        let f = parse_group_file(
            "[group]\nkind = zm_semidirect\nn = 5\ns = 3\nt_order = inf\nletters = a x\n\n[genset]\nu = a x\nv = x a\n",
            None,
        )
        .unwrap();
        assert_eq!(f.genset, vec![("u".into(), "a x".into()), ("v".into(), "x a".into())]);
        let g = evaluate_text(&f.engine, "x a").unwrap();
        assert_eq!(f.engine.key(&g), "(3,1)");
    }

    #[test]
    fn presentation_kind() {
        let text = "[group]\nkind = presentation\ngenerators = a b\nrelator = a b a^-1 b\nrelator = b a b^-1 a\n";
        let f = parse_group_file(text, None).unwrap();
        assert_eq!(f.engine.order(), Some(8));
        let (p, cap) = parse_presentation(text).unwrap();
        assert_eq!((p.relators().len(), cap), (2, DEFAULT_COSET_CAP));
    }

    #[test]
    fn errors() {
        assert!(matches!(parse_group_file("[group]\nkind = nope\n", None), Err(GroupError::File(_))));
        assert!(matches!(parse_group_file("kind = bs12\n", None), Err(GroupError::File(_))));
        assert!(matches!(parse_group_file("[genset]\n", None), Err(GroupError::File(_))));
        assert!(parse_group_file("[group]\nkind = zn_c2\nn = 1\nphi = swap 1 2\n", None).is_err());
    }

    #[test]
    fn cycles() {
        let c3 = FiniteGroupTable::cyclic(3);
        assert_eq!(parse_cycles("(g g^2)", &c3).unwrap(), vec![0, 2, 1]);
        assert_eq!(parse_cycles("", &c3).unwrap(), vec![0, 1, 2]);
        assert!(parse_cycles("(g h)", &c3).is_err());
    }
}
