//! Line-oriented derivation spec files.
//!
//! ```text
//! # comment
//! ring Q[X][T,Y,Z]          # base block optional: `ring Q[Y,Z]` means A = Q
//! der D: T -> 0, Y -> X, Z -> Y
//! poly Tprime = T - Y^2 + 2*X*Z
//! tuple t1 = (T, Y, Z)
//! ```
//!
//! Omitted variables in a `der` line default to image zero. Polynomial
//! expressions may reference earlier `poly` bindings by name.

use std::collections::BTreeMap;
use std::path::Path;
use std::sync::Arc;

use crate::derivation::Derivation;
use crate::error::{Error, Result};
use crate::parse::parse_with_resolver;
use crate::poly::Polynomial;
use crate::ring::RingSpec;

/// A parsed spec file: one ring, any number of named derivations,
/// polynomial bindings, and tuples.
#[derive(Clone, Debug)]
pub struct SpecFile {
    ring: Arc<RingSpec>,
    derivations: Vec<(String, Derivation)>,
    polys: BTreeMap<String, Polynomial>,
    tuples: BTreeMap<String, Vec<Polynomial>>,
}

impl SpecFile {
    pub fn ring(&self) -> &Arc<RingSpec> {
        &self.ring
    }

    pub fn load(path: &Path) -> Result<SpecFile> {
        let text = std::fs::read_to_string(path)?;
        SpecFile::parse_str(&text)
    }

    pub fn parse_str(text: &str) -> Result<SpecFile> {
        let mut ring: Option<Arc<RingSpec>> = None;
        let mut derivations: Vec<(String, Derivation)> = Vec::new();
        let mut polys: BTreeMap<String, Polynomial> = BTreeMap::new();
        let mut tuples: BTreeMap<String, Vec<Polynomial>> = BTreeMap::new();

        for (lineno, raw) in text.lines().enumerate() {
            let line = lineno + 1;
            let fail = |msg: String| Error::SpecFile { line, msg };
            let content = raw.split('#').next().unwrap_or("").trim();
            if content.is_empty() {
                continue;
            }
            let (keyword, rest) = content
                .split_once(char::is_whitespace)
                .ok_or_else(|| fail(format!("malformed line `{content}`")))?;
            let rest = rest.trim();
            match keyword {
                "ring" => {
                    if ring.is_some() {
                        return Err(fail("duplicate ring declaration".into()));
                    }
                    ring = Some(parse_ring(rest).map_err(|e| fail(e))?);
                }
                "der" | "poly" | "tuple" => {
                    let spec = ring
                        .as_ref()
                        .ok_or_else(|| fail("a ring must be declared first".into()))?
                        .clone();
                    let resolver = |name: &str| polys.get(name).cloned();
                    match keyword {
                        "der" => {
                            let (name, body) = rest
                                .split_once(':')
                                .ok_or_else(|| fail("expected `der <name>: ...`".into()))?;
                            let name = name.trim().to_string();
                            if derivations.iter().any(|(n, _)| n == &name) {
                                return Err(fail(format!("duplicate derivation `{name}`")));
                            }
                            let mut images = Vec::new();
                            for part in body.split(',') {
                                let part = part.trim();
                                if part.is_empty() {
                                    continue;
                                }
                                let (var, image) = part.split_once("->").ok_or_else(|| {
                                    fail(format!("expected `<var> -> <poly>` in `{part}`"))
                                })?;
                                let image = parse_with_resolver(image.trim(), &spec, &resolver)
                                    .map_err(|e| fail(e.to_string()))?;
                                images.push((var.trim().to_string(), image));
                            }
                            let der = Derivation::new(&spec, images)
                                .map_err(|e| fail(e.to_string()))?;
                            derivations.push((name, der));
                        }
                        "poly" => {
                            let (name, body) = rest
                                .split_once('=')
                                .ok_or_else(|| fail("expected `poly <name> = <poly>`".into()))?;
                            let name = name.trim().to_string();
                            if spec.index_of(&name).is_some() {
                                return Err(fail(format!(
                                    "`{name}` is already a ring generator"
                                )));
                            }
                            let value = parse_with_resolver(body.trim(), &spec, &resolver)
                                .map_err(|e| fail(e.to_string()))?;
                            if polys.insert(name.clone(), value).is_some() {
                                return Err(fail(format!("duplicate poly `{name}`")));
                            }
                        }
                        "tuple" => {
                            let (name, body) = rest
                                .split_once('=')
                                .ok_or_else(|| fail("expected `tuple <name> = (...)`".into()))?;
                            let name = name.trim().to_string();
                            let body = body.trim();
                            let inner = body
                                .strip_prefix('(')
                                .and_then(|b| b.strip_suffix(')'))
                                .ok_or_else(|| fail("tuple body must be parenthesized".into()))?;
                            let mut entries = Vec::new();
                            for part in inner.split(',') {
                                let value = parse_with_resolver(part.trim(), &spec, &resolver)
                                    .map_err(|e| fail(e.to_string()))?;
                                entries.push(value);
                            }
                            if tuples.insert(name.clone(), entries).is_some() {
                                return Err(fail(format!("duplicate tuple `{name}`")));
                            }
                        }
                        _ => unreachable!(),
                    }
                }
                other => {
                    return Err(fail(format!("unknown keyword `{other}`")));
                }
            }
        }

        Ok(SpecFile {
            ring: ring.ok_or(Error::SpecFile {
                line: 0,
                msg: "missing ring declaration".into(),
            })?,
            derivations,
            polys,
            tuples,
        })
    }

    pub fn derivation_names(&self) -> impl Iterator<Item = &str> {
        self.derivations.iter().map(|(n, _)| n.as_str())
    }

    pub fn derivation(&self, name: &str) -> Result<&Derivation> {
        self.derivations
            .iter()
            .find(|(n, _)| n == name)
            .map(|(_, d)| d)
            .ok_or_else(|| Error::UnknownName(name.to_string()))
    }

    /// The named derivation, or the file's only derivation when `name` is
    /// not given.
    pub fn select_derivation(&self, name: Option<&str>) -> Result<&Derivation> {
        match name {
            Some(n) => self.derivation(n),
            None => match self.derivations.as_slice() {
                [(_, d)] => Ok(d),
                [] => Err(Error::Usage("the file declares no derivation".into())),
                _ => Err(Error::Usage(format!(
                    "the file declares {} derivations; pass --der",
                    self.derivations.len()
                ))),
            },
        }
    }

    pub fn poly(&self, name: &str) -> Option<&Polynomial> {
        self.polys.get(name)
    }

    pub fn tuple(&self, name: &str) -> Result<&[Polynomial]> {
        self.tuples
            .get(name)
            .map(Vec::as_slice)
            .ok_or_else(|| Error::UnknownName(name.to_string()))
    }

    /// Resolves a CLI argument: a bound polynomial name or a literal
    /// expression in the file's ring (bindings visible).
    pub fn resolve_poly(&self, text: &str) -> Result<Polynomial> {
        if let Some(p) = self.polys.get(text.trim()) {
            return Ok(p.clone());
        }
        parse_with_resolver(text, &self.ring, &|name| self.polys.get(name).cloned())
    }
}

fn parse_ring(rest: &str) -> std::result::Result<Arc<RingSpec>, String> {
    let rest = rest.trim();
    let body = rest
        .strip_prefix('Q')
        .ok_or_else(|| format!("ring must start with `Q`, got `{rest}`"))?;
    let mut blocks: Vec<Vec<String>> = Vec::new();
    let mut remaining = body.trim();
    while !remaining.is_empty() {
        let inner = remaining
            .strip_prefix('[')
            .ok_or_else(|| format!("expected `[` in ring declaration near `{remaining}`"))?;
        let (names, rest) = inner
            .split_once(']')
            .ok_or_else(|| "unclosed `[` in ring declaration".to_string())?;
        let names: Vec<String> = names
            .split(',')
            .map(|n| n.trim().to_string())
            .filter(|n| !n.is_empty())
            .collect();
        blocks.push(names);
        remaining = rest.trim();
    }
    let (base, vars) = match blocks.len() {
        1 => (Vec::new(), blocks.pop().unwrap()),
        2 => {
            let vars = blocks.pop().unwrap();
            (blocks.pop().unwrap(), vars)
        }
        n => return Err(format!("expected one or two bracket blocks, got {n}")),
    };
    RingSpec::new(base, vars).map_err(|e| e.to_string())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse;

    const REMARK1: &str = "\
# the running example
ring Q[X][T,Y,Z]
der D: T -> 0, Y -> X, Z -> Y
poly Tprime = T - Y^2 + 2*X*Z
tuple t1 = (T, Y, Z)
tuple t2 = (Tprime, Y, Z)
";

    #[test]
    fn parses_a_full_file() {
        let file = SpecFile::parse_str(REMARK1).unwrap();
        assert_eq!(file.ring().to_string(), "Q[X][T,Y,Z]");
        let d = file.select_derivation(None).unwrap();
        assert_eq!(
            d.image_of("Y").unwrap(),
            &parse("X", file.ring()).unwrap()
        );
        assert!(d.image_of("T").unwrap().is_zero());
        let t2 = file.tuple("t2").unwrap();
        assert_eq!(t2[0], parse("T - Y^2 + 2*X*Z", file.ring()).unwrap());
        assert_eq!(
            file.resolve_poly("Tprime + 1").unwrap(),
            parse("T - Y^2 + 2*X*Z + 1", file.ring()).unwrap()
        );
    }

    #[test]
    fn base_block_is_optional() {
        let file = SpecFile::parse_str("ring Q[Y,Z]\nder D: Z -> Y\n").unwrap();
        assert_eq!(file.ring().base_count(), 0);
        assert_eq!(file.ring().var_count(), 2);
    }

    #[test]
    fn errors_carry_line_numbers() {
        let err = SpecFile::parse_str("ring Q[X][Y]\nder D: W -> 1\n").unwrap_err();
        match err {
            Error::SpecFile { line, .. } => assert_eq!(line, 2),
            other => panic!("unexpected error {other}"),
        }
        assert!(SpecFile::parse_str("der D: Y -> 1\n").is_err());
        assert!(SpecFile::parse_str("ring Q[X][Y]\nbogus Z\n").is_err());
    }

    #[test]
    fn omitted_variables_default_to_zero() {
        let file = SpecFile::parse_str("ring Q[X][Y,Z]\nder D: Y -> X\n").unwrap();
        let d = file.derivation("D").unwrap();
        assert!(d.image_of("Z").unwrap().is_zero());
    }

    #[test]
    fn select_derivation_requires_disambiguation() {
        let file =
            SpecFile::parse_str("ring Q[Y,Z]\nder D1: Z -> Y\nder D2: Z -> 1\n").unwrap();
        assert!(file.select_derivation(None).is_err());
        assert!(file.select_derivation(Some("D2")).is_ok());
    }
}
