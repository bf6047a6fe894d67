use super::parse::parse_identity;
use super::Identity;
use crate::error::{Error, Result};

/// Named identities. Some names stand for a conjunction of identities and
/// are stored as several entries.
pub const CATALOG: &[(&str, &[&str])] = &[
    ("WARD", &["(x.z).(y.z) = x.y"]),
    ("DOUBLE_WARD", &["((e.e).(x.z)).((e.y).z) = x.y"]),
    ("DW_WEAK", &["(e.(x.z)).((e.y).z) = x.y"]),
    ("INTERCHANGE", &["(x.y)*(z.w) = (x*z).(y*w)"]),
    ("LATERAL", &["(x.y)*(z.w) = (y*x).(w*z)"]),
    ("REVERSIBLE_LAW", &["(x.y)*(z.w) = (w*z).(y*x)"]),
    ("E6", &["x.x = y.y", "x.x = e"]),
    ("E7", &["x.e = x"]),
    ("E8", &["e.(x.y) = y.x"]),
    ("E9", &["e.(e.x) = x"]),
    ("E10", &["(x.y).z = x.(z.(e.y))"]),
    ("L41_1", &["e.e = e"]),
    ("L41_2", &["e.x = x.e"]),
    ("L41_3", &["(e.x).(e.y) = e.(y.x)"]),
    ("L41_4", &["e.((e.y).(e.x)) = x.y"]),
    ("L41_5", &["(e.(x.z)).((e.y).z) = x.y"]),
    ("L41_6", &["x.(x.e) = e", "(e.x).x = e"]),
    ("L41_7", &["(x.y).x = y", "x.(y.x) = y"]),
    ("MEDIAL", &["(x.y).(z.w) = (x.z).(y.w)"]),
    ("RIGHT_MODULAR", &["(x.y).z = (z.y).x"]),
    ("LEFT_MODULAR", &["x.(y.z) = z.(y.x)"]),
    ("REVERSIBLE_MAGMA", &["(x.y).(z.w) = (w.z).(y.x)"]),
];

pub fn catalog_names() -> impl Iterator<Item = &'static str> {
    CATALOG.iter().map(|(name, _)| *name)
}

/// The identities stored under `name` (case-insensitive).
pub fn catalog(name: &str) -> Result<Vec<Identity>> {
    let (_, texts) = CATALOG
        .iter()
        .find(|(n, _)| n.eq_ignore_ascii_case(name))
        .ok_or_else(|| Error::UnknownIdentity(name.to_string()))?;
    Ok(texts
        .iter()
        .map(|t| parse_identity(t).expect("catalog entries are well formed"))
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_entry_parses_and_prints_back() {
        for (name, texts) in CATALOG {
            let ids = catalog(name).unwrap();
            assert_eq!(ids.len(), texts.len());
            for (id, text) in ids.iter().zip(*texts) {
                assert_eq!(id.to_string(), *text, "{name}");
            }
        }
    }

    #[test]
    fn lookup() {
        assert_eq!(catalog("L41_7").unwrap().len(), 2);
        assert_eq!(catalog("e8").unwrap()[0].to_string(), "e.(x.y) = y.x");
        assert_eq!(
            catalog("NOPE"),
            Err(Error::UnknownIdentity("NOPE".into()))
        );
    }
}
