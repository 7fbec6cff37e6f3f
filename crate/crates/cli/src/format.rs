//! Text and JSON forms for permutation sets, tableaux and expansions.

use anyhow::{anyhow, bail, Context, Result};
use num_bigint::BigInt;
use rotschur::shape::ShapeKind;
use rotschur::{
    MExpansion, Partition, PermMultiset, Permutation, QSymF, SchurExpansion, Shape, Tableau,
};
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

#[derive(Debug, Serialize, Deserialize)]
pub struct MultisetEntry {
    pub perm: String,
    #[serde(default = "one")]
    pub mult: u64,
}

fn one() -> u64 {
    1
}

/// Parses a set of permutations of a common size.
///
/// A leading `[` selects the JSON form `[{perm, mult}]`. Otherwise items are
/// separated by `;` or newlines when either occurs (each item may then use
/// commas between entries), and by commas or whitespace when not.
pub fn parse_set(input: &str, n: Option<usize>) -> Result<PermMultiset> {
    let input = input.trim();
    let mut items: Vec<(String, u64)> = Vec::new();
    if input.starts_with('[') {
        let entries: Vec<MultisetEntry> =
            serde_json::from_str(input).context("invalid multiset JSON")?;
        items.extend(entries.into_iter().map(|e| (e.perm, e.mult)));
    } else if input.contains([';', '\n']) {
        items.extend(
            input
                .split([';', '\n'])
                .map(str::trim)
                .filter(|s| !s.is_empty())
                .map(|s| (s.into(), 1)),
        );
    } else {
        items.extend(
            input
                .split(|c: char| c == ',' || c.is_whitespace())
                .filter(|s| !s.is_empty())
                .map(|s| (s.into(), 1)),
        );
    }
    let mut perms = Vec::with_capacity(items.len());
    for (token, mult) in items {
        let p: Permutation = token
            .parse()
            .map_err(|e| anyhow!("invalid permutation `{token}`: {e}"))?;
        perms.push((token, p, mult));
    }
    let n = match (n, perms.first()) {
        (Some(n), _) => n,
        (None, Some((_, p, _))) => p.n(),
        (None, None) => bail!("empty permutation set: give its size with --n"),
    };
    let mut set = PermMultiset::new(n);
    for (token, p, mult) in perms {
        if p.n() != n {
            bail!("permutation `{token}` has size {}, expected {n}", p.n());
        }
        set.insert(p, mult)?;
    }
    Ok(set)
}

pub fn set_json(set: &PermMultiset) -> Value {
    let entries: Vec<MultisetEntry> = set
        .iter()
        .map(|(p, mult)| MultisetEntry {
            perm: p.to_string(),
            mult,
        })
        .collect();
    serde_json::to_value(entries).expect("multiset entries serialize")
}

pub fn set_text(set: &PermMultiset) -> String {
    let mut out = String::new();
    for (p, mult) in set.iter() {
        if mult == 1 {
            out.push_str(&format!("{p}\n"));
        } else {
            out.push_str(&format!("{p} x{mult}\n"));
        }
    }
    out
}

fn coeff_json(c: &BigInt) -> Value {
    match i64::try_from(c) {
        Ok(v) => json!(v),
        Err(_) => json!(c.to_string()),
    }
}

pub fn qsym_json(q: &QSymF) -> Value {
    let terms: Vec<Value> = q
        .terms()
        .map(|(d, c)| json!({"index": d.to_vec(), "coeff": coeff_json(c)}))
        .collect();
    json!({"basis": "F", "n": q.n(), "terms": terms})
}

pub fn m_json(m: &MExpansion) -> Value {
    let terms: Vec<Value> = m
        .terms()
        .map(|(a, c)| json!({"index": a.parts(), "coeff": coeff_json(c)}))
        .collect();
    json!({"basis": "M", "n": m.n(), "terms": terms})
}

pub fn schur_json(e: &SchurExpansion) -> Value {
    let terms: Vec<Value> = e
        .terms()
        .map(|(l, c)| json!({"index": l.parts(), "coeff": coeff_json(c)}))
        .collect();
    json!({"basis": "s", "n": e.n(), "terms": terms})
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ShapeJson {
    pub lambda: Vec<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub mu: Option<Vec<usize>>,
    #[serde(default)]
    pub boxed: bool,
}

/// Boxed tableaux list the disconnected box as the first row; skew rows list
/// only the cells outside `mu`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TableauJson {
    pub shape: ShapeJson,
    pub rows: Vec<Vec<usize>>,
}

impl From<&Tableau> for TableauJson {
    fn from(t: &Tableau) -> Self {
        let shape = match t.shape().kind() {
            ShapeKind::Straight => ShapeJson {
                lambda: t.shape().outer().parts().to_vec(),
                mu: None,
                boxed: false,
            },
            ShapeKind::Skew => ShapeJson {
                lambda: t.shape().outer().parts().to_vec(),
                mu: Some(t.shape().inner().parts().to_vec()),
                boxed: false,
            },
            ShapeKind::Boxed(lambda) => ShapeJson {
                lambda: lambda.parts().to_vec(),
                mu: None,
                boxed: true,
            },
        };
        TableauJson {
            shape,
            rows: t.rows().to_vec(),
        }
    }
}

impl TryFrom<TableauJson> for Tableau {
    type Error = anyhow::Error;

    fn try_from(j: TableauJson) -> Result<Tableau> {
        let lambda = Partition::new(j.shape.lambda)?;
        let shape = match (j.shape.boxed, j.shape.mu) {
            (true, None) => Shape::boxed(lambda)?,
            (true, Some(_)) => bail!("a boxed shape cannot also have an inner shape"),
            (false, Some(mu)) => Shape::skew(lambda, Partition::new(mu)?)?,
            (false, None) => Shape::straight(lambda),
        };
        Ok(Tableau::new(shape, j.rows)?)
    }
}

pub fn tableau_json(t: &Tableau) -> Value {
    serde_json::to_value(TableauJson::from(t)).expect("tableau serializes")
}

/// Parses a tableau from JSON, or from rows separated by `/`. A row is a
/// digit string, or entries separated by commas or spaces. With `boxed`, the
/// first row is the entry of the disconnected box.
pub fn parse_tableau(input: &str, boxed: bool) -> Result<Tableau> {
    let input = input.trim();
    if input.starts_with('{') {
        let j: TableauJson = serde_json::from_str(input).context("invalid tableau JSON")?;
        return Tableau::try_from(j);
    }
    let mut rows = Vec::new();
    for row in input.split('/') {
        let row = row.trim();
        let entries: Result<Vec<usize>> = if row.contains(|c: char| c == ',' || c.is_whitespace()) {
            row.split(|c: char| c == ',' || c.is_whitespace())
                .filter(|s| !s.is_empty())
                .map(|s| {
                    s.parse()
                        .map_err(|_| anyhow!("invalid tableau entry `{s}`"))
                })
                .collect()
        } else {
            row.chars()
                .map(|c| {
                    c.to_digit(10)
                        .map(|d| d as usize)
                        .ok_or_else(|| anyhow!("invalid tableau entry `{c}`"))
                })
                .collect()
        };
        let entries = entries?;
        if entries.is_empty() {
            bail!("empty row in tableau `{input}`");
        }
        rows.push(entries);
    }
    if boxed {
        let first = rows.remove(0);
        let [b] = first[..] else {
            bail!("the box row must hold exactly one entry, found {first:?}")
        };
        Ok(Tableau::boxed(b, rows)?)
    } else {
        Ok(Tableau::straight(rows)?)
    }
}

/// Compact one-line form: rows joined by `/`, digits run together when
/// `n ≤ 9`. Boxed tableaux start with the box entry.
pub fn tableau_compact(t: &Tableau) -> String {
    let sep = if t.n() <= 9 { "" } else { "," };
    t.rows()
        .iter()
        .map(|row| {
            row.iter()
                .map(ToString::to_string)
                .collect::<Vec<_>>()
                .join(sep)
        })
        .collect::<Vec<_>>()
        .join("/")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sets_split_on_commas_or_semicolons() {
        let a = parse_set("3142,1423", None).unwrap();
        assert_eq!(a.n(), 4);
        assert_eq!(a.distinct(), 2);
        let b = parse_set("3142\n1423\n", None).unwrap();
        assert_eq!(a, b);
        let big = parse_set("2,1,3,4,5,6,7,8,9,10; 1,2,3,4,5,6,7,8,9,10", None).unwrap();
        assert_eq!(big.n(), 10);
        assert_eq!(big.distinct(), 2);
    }

    #[test]
    fn set_errors_name_the_token() {
        let err = parse_set("123,1x3", None).unwrap_err().to_string();
        assert!(err.contains("`1x3`"), "{err}");
        let err = parse_set("123,12", None).unwrap_err().to_string();
        assert!(err.contains("`12`"), "{err}");
        assert!(parse_set("", None).is_err());
        assert_eq!(parse_set("", Some(3)).unwrap().n(), 3);
    }

    #[test]
    fn set_json_round_trips() {
        let mut a = parse_set("132 213", None).unwrap();
        a.insert("132".parse().unwrap(), 2).unwrap();
        let text = set_json(&a).to_string();
        assert_eq!(text, r#"[{"mult":3,"perm":"132"},{"mult":1,"perm":"213"}]"#);
        assert_eq!(parse_set(&text, None).unwrap(), a);
        assert_eq!(set_text(&a), "132 x3\n213\n");
    }

    #[test]
    fn tableau_forms_round_trip() {
        let t = parse_tableau("6/135/24", true).unwrap();
        assert_eq!(
            t,
            Tableau::boxed(6, vec![vec![1, 3, 5], vec![2, 4]]).unwrap()
        );
        assert_eq!(tableau_compact(&t), "6/135/24");
        let j = tableau_json(&t);
        assert_eq!(
            j.to_string(),
            r#"{"rows":[[6],[1,3,5],[2,4]],"shape":{"boxed":true,"lambda":[3,2]}}"#
        );
        assert_eq!(parse_tableau(&j.to_string(), false).unwrap(), t);
        let wide = parse_tableau("1 2 3 4 5/6 7 8 9 10", false).unwrap();
        assert_eq!(tableau_compact(&wide), "1,2,3,4,5/6,7,8,9,10");
        let skew = Tableau::new(
            Shape::skew("2,1".parse().unwrap(), "1".parse().unwrap()).unwrap(),
            vec![vec![1], vec![2]],
        )
        .unwrap();
        let j = tableau_json(&skew).to_string();
        assert_eq!(
            j,
            r#"{"rows":[[1],[2]],"shape":{"boxed":false,"lambda":[2,1],"mu":[1]}}"#
        );
        assert_eq!(parse_tableau(&j, false).unwrap(), skew);
    }

    #[test]
    fn bad_tableaux_are_rejected() {
        assert!(parse_tableau("12/3x", false)
            .unwrap_err()
            .to_string()
            .contains("`x`"));
        assert!(parse_tableau("12/34", true).is_err());
        assert!(parse_tableau("13/2/", false).is_err());
    }

    #[test]
    fn expansion_json() {
        let e = SchurExpansion::schur("2,2".parse().unwrap());
        assert_eq!(
            schur_json(&e).to_string(),
            r#"{"basis":"s","n":4,"terms":[{"coeff":1,"index":[2,2]}]}"#
        );
    }
}
