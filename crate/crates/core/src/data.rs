//! Fixture data shipped with the library.
//!
//! Files are embedded at build time. Setting `QH_DATA_DIR` makes the library
//! read files with the same relative paths from that directory instead.

use std::path::PathBuf;

use crate::error::{Error, Result};
use crate::naming::{NameEntry, NameFixture};
use crate::root_system::{DynkinType, MarkedSpace};

const EMBEDDED: &[(&str, &str)] = &[
    ("names/E6_P1.json", include_str!("../data/names/E6_P1.json")),
    ("names/E7_P7.json", include_str!("../data/names/E7_P7.json")),
    ("seeds/E6_P1.json", include_str!("../data/seeds/E6_P1.json")),
    ("seeds/E7_P7.json", include_str!("../data/seeds/E7_P7.json")),
    (
        "presentations/E6_P1.json",
        include_str!("../data/presentations/E6_P1.json"),
    ),
    (
        "presentations/E7_P7.json",
        include_str!("../data/presentations/E7_P7.json"),
    ),
];

/// Environment variable overriding the data directory.
pub const DATA_DIR_VAR: &str = "QH_DATA_DIR";

/// Reads a data file by relative path, or `None` when it does not exist.
pub fn read(path: &str) -> Result<Option<String>> {
    if let Some(dir) = std::env::var_os(DATA_DIR_VAR) {
        let full = PathBuf::from(dir).join(path);
        return match std::fs::read_to_string(&full) {
            Ok(s) => Ok(Some(s)),
            Err(e) if e.kind() == std::io::ErrorKind::NotFound => Ok(None),
            Err(e) => Err(Error::Data(format!("{}: {e}", full.display()))),
        };
    }
    Ok(EMBEDDED
        .iter()
        .find(|(p, _)| *p == path)
        .map(|(_, s)| s.to_string()))
}

/// File stem for a space, e.g. `E6_P1`. `E6/P6` shares the files of `E6/P1`.
pub(crate) fn stem(space: &MarkedSpace) -> (String, bool) {
    let ty = space.root_system().dynkin_type();
    let node = space.node() + 1;
    if ty == DynkinType::E6 && node == 6 {
        return ("E6_P1".into(), true);
    }
    (format!("{ty}_P{node}"), false)
}

/// Relabels Dynkin labels of an `E6/P1` weight into `E6/P6` labels.
pub(crate) fn mirror_weight(space: &MarkedSpace, w: &[i64]) -> Vec<i64> {
    let iota = space.root_system().weyl_involution();
    (0..w.len()).map(|j| w[iota[j]]).collect()
}

/// Contents of `dir/<stem>.json` for a space, if shipped.
pub(crate) fn for_space(dir: &str, space: &MarkedSpace) -> Result<Option<String>> {
    read(&format!("{dir}/{}.json", stem(space).0))
}

/// Name fixture for a space, if one is shipped.
pub fn name_fixture(space: &MarkedSpace) -> Result<Option<NameFixture>> {
    let (stem, mirrored) = stem(space);
    let Some(text) = read(&format!("names/{stem}.json"))? else {
        return Ok(None);
    };
    let mut fixture: NameFixture = serde_json::from_str(&text)?;
    if mirrored {
        fixture.space = space.label();
        fixture.names = fixture
            .names
            .into_iter()
            .map(|e| NameEntry {
                weight: mirror_weight(space, &e.weight),
                name: e.name,
            })
            .collect();
    }
    Ok(Some(fixture))
}
