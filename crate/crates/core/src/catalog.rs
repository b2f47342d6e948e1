//! Ring descriptors and class data for worked examples, with provenance.
//!
//! Entries are TOML files. The copies under `data/catalog` are compiled into
//! the library; setting `CONELAB_DATA` to a directory loads `*.toml` from
//! there instead. Every datum carries a note saying where it comes from, and
//! loading validates each entry against its own ring.

use std::collections::{BTreeMap, BTreeSet};
use std::path::Path;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::classes::{
    syzygy_rank_profile, BettiSequence, ExtensionMap, ModuleClass, RingDescriptor,
};
use crate::cone::RationalCone;
use crate::error::{Error, Result};
use crate::format::{parse_toml, to_toml};
use crate::lattice::{presentation_from_relations, GroupElement, GroupPresentation, IntegerMatrix};
use crate::linalg::{RationalMatrix, RationalVector};
use crate::theorems::{AlternatingStream, ClassStream, DivisorLine, LinearStream};

pub const DATA_ENV: &str = "CONELAB_DATA";

const EMBEDDED: &[(&str, &str)] = &[
    ("ci-nonrational-3d", include_str!("../../../data/catalog/ci-nonrational-3d.toml")),
    ("ci-rational-3d", include_str!("../../../data/catalog/ci-rational-3d.toml")),
    ("determinantal-3x3", include_str!("../../../data/catalog/determinantal-3x3.toml")),
    ("quadric-cone-3d", include_str!("../../../data/catalog/quadric-cone-3d.toml")),
    ("segre-cubic-p1", include_str!("../../../data/catalog/segre-cubic-p1.toml")),
    ("synthetic-plane", include_str!("../../../data/catalog/synthetic-plane.toml")),
    ("veronese-pinched", include_str!("../../../data/catalog/veronese-pinched.toml")),
    ("x2w-yz", include_str!("../../../data/catalog/x2w-yz.toml")),
];

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ClassRecord {
    pub label: String,
    pub rank: u64,
    #[serde(with = "crate::format::bigint_list")]
    pub free: Vec<BigInt>,
    #[serde(with = "crate::format::bigint_list", default)]
    pub torsion: Vec<BigInt>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub mcm: Option<bool>,
    pub note: String,
}

impl ClassRecord {
    pub fn to_class(&self) -> ModuleClass {
        ModuleClass {
            label: self.label.clone(),
            rank: self.rank,
            kernel_part: GroupElement {
                free_part: self.free.clone(),
                torsion_part: self.torsion.clone(),
            },
            mcm: self.mcm,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BettiRecord {
    pub class: String,
    #[serde(flatten)]
    pub sequence: BettiSequence,
    pub note: String,
}

/// Integer presentation of `h(R)` itself (rank generator first).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PresentationRecord {
    pub generators: usize,
    pub rows: Vec<String>,
    #[serde(default)]
    pub labels: Vec<String>,
    pub note: String,
}

impl PresentationRecord {
    pub fn matrix(&self) -> Result<IntegerMatrix> {
        let rows = self
            .rows
            .iter()
            .map(|r| crate::format::bigint_list::from_text(r))
            .collect::<Result<Vec<_>>>()?;
        IntegerMatrix::from_rows(self.generators, rows)
    }

    pub fn group(&self) -> Result<GroupPresentation> {
        Ok(presentation_from_relations(self.generators, &self.matrix()?)?.with_labels(self.labels.clone()))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ChiRecord {
    pub label: String,
    /// `χ(L, -)` on the basis `[R], [Φ_1], …`.
    pub functional: RationalVector,
    pub probe: GroupElement,
    pub note: String,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum StreamKind {
    Linear,
    Alternating,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct StreamRecord {
    pub name: String,
    pub kind: StreamKind,
    pub rank: u64,
    pub base: GroupElement,
    pub step: GroupElement,
    pub note: String,
}

impl StreamRecord {
    pub fn build(&self, group: &GroupPresentation) -> Box<dyn ClassStream> {
        let base = ModuleClass::new(
            format!("{}[R]+{}", self.rank, self.base),
            self.rank,
            self.base.clone(),
        );
        match self.kind {
            StreamKind::Linear => Box::new(LinearStream {
                base,
                step: self.step.clone(),
                group: group.clone(),
            }),
            StreamKind::Alternating => Box::new(AlternatingStream {
                base,
                step: self.step.clone(),
                group: group.clone(),
            }),
        }
    }
}

/// A subcone `V` and a class whose syzygies are tested against it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SyzygyEntryRecord {
    pub name: String,
    pub class: String,
    pub cone: Vec<RationalVector>,
    pub note: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PushforwardRecord {
    pub name: String,
    pub source: String,
    pub matrix: Vec<RationalVector>,
    pub declared_injective: bool,
    pub note: String,
}

impl PushforwardRecord {
    pub fn map(&self) -> Result<ExtensionMap> {
        let cols = self.matrix.first().map_or(0, RationalVector::dim);
        ExtensionMap::new(RationalMatrix::from_rows(cols, &self.matrix)?, self.declared_injective)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FactRecord {
    pub statement: String,
    pub note: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CatalogEntry {
    pub name: String,
    pub version: u32,
    pub citation: String,
    pub ring: RingDescriptor,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub presentation: Option<PresentationRecord>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub classes: Vec<ClassRecord>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub betti: Vec<BettiRecord>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub lines: Vec<DivisorLine>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub chi: Vec<ChiRecord>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub streams: Vec<StreamRecord>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub syzygy_entry: Vec<SyzygyEntryRecord>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub pushforward: Vec<PushforwardRecord>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub facts: Vec<FactRecord>,
}

fn require_note(what: &str, note: &str) -> Result<()> {
    if note.trim().is_empty() {
        Err(Error::DataInconsistency(format!("{what} has no provenance note")))
    } else {
        Ok(())
    }
}

/// Picks the item called `name`, or the first one when `name` is `None`.
pub fn select<'a, T>(items: &'a [T], name: Option<&str>, key: impl Fn(&T) -> &str, what: &str) -> Result<&'a T> {
    match name {
        None => items
            .first()
            .ok_or_else(|| Error::InvalidArgument(format!("entry has no {what}"))),
        Some(n) => items.iter().find(|i| key(i) == n).ok_or_else(|| {
            Error::InvalidArgument(format!(
                "no {what} named `{n}`; available: {}",
                items.iter().map(key).collect::<Vec<_>>().join(", ")
            ))
        }),
    }
}

impl CatalogEntry {
    pub fn parse(text: &str) -> Result<Self> {
        let entry: CatalogEntry = parse_toml(text)?;
        entry.validate()?;
        Ok(entry)
    }

    pub fn to_toml(&self) -> Result<String> {
        to_toml(self)
    }

    pub fn kernel_group(&self) -> Result<GroupPresentation> {
        self.ring.kernel_group()
    }

    pub fn module_classes(&self) -> Vec<ModuleClass> {
        self.classes.iter().map(ClassRecord::to_class).collect()
    }

    pub fn class(&self, label: &str) -> Result<ModuleClass> {
        select(&self.classes, Some(label), |c| &c.label, "class").map(ClassRecord::to_class)
    }

    /// Classes declared MCM of the given rank.
    pub fn mcm_classes_of_rank(&self, rank: u64) -> Vec<ModuleClass> {
        self.module_classes()
            .into_iter()
            .filter(|c| c.mcm == Some(true) && c.rank == rank)
            .collect()
    }

    pub fn mcm_classes(&self) -> Vec<ModuleClass> {
        self.module_classes()
            .into_iter()
            .filter(|c| c.mcm == Some(true))
            .collect()
    }

    pub fn betti_for(&self, label: &str) -> Option<&BettiSequence> {
        self.betti.iter().find(|b| b.class == label).map(|b| &b.sequence)
    }

    pub fn line(&self, name: Option<&str>) -> Result<&DivisorLine> {
        select(&self.lines, name, |l| &l.name, "divisor line")
    }

    pub fn syzygy_scenario(&self, name: Option<&str>) -> Result<(ModuleClass, BettiSequence, RationalCone)> {
        let s = select(&self.syzygy_entry, name, |s| &s.name, "syzygy-entry scenario")?;
        let m = self.class(&s.class)?;
        let betti = self.betti_for(&s.class).cloned().ok_or_else(|| {
            Error::DataInconsistency(format!("scenario `{}` needs Betti data for `{}`", s.name, s.class))
        })?;
        let cone = RationalCone::new(self.ring.real_dim(), s.cone.clone())?;
        Ok((m, betti, cone))
    }

    pub fn validate(&self) -> Result<()> {
        let bad = |msg: String| Error::DataInconsistency(format!("entry `{}`: {msg}", self.name));
        self.ring.validate()?;
        require_note("ring", &self.ring.provenance)?;
        let k = self.kernel_group()?;
        let dim = self.ring.real_dim();

        let mut labels = BTreeSet::new();
        for c in &self.classes {
            if !labels.insert(c.label.as_str()) {
                return Err(bad(format!("duplicate class label `{}`", c.label)));
            }
            k.check(&c.to_class().kernel_part)?;
            require_note(&format!("class `{}`", c.label), &c.note)?;
        }
        for b in &self.betti {
            let class = self.class(&b.class)?;
            syzygy_rank_profile(class.rank, &b.sequence, 16)?;
            require_note(&format!("Betti data of `{}`", b.class), &b.note)?;
        }
        if let Some(p) = &self.presentation {
            require_note("presentation", &p.note)?;
            let h = p.group()?;
            if h.free_rank != self.ring.zeta + 1 || h.torsion_orders != self.ring.torsion_orders {
                return Err(bad(format!(
                    "presentation gives {} but the ring declares Z + k(R) = {}",
                    h.summary(),
                    GroupPresentation::new(self.ring.zeta + 1, self.ring.torsion_orders.clone())?.summary()
                )));
            }
        }
        for l in &self.lines {
            k.check(&l.base)?;
            k.check(&l.direction)?;
            require_note(&format!("line `{}`", l.name), &l.provenance)?;
        }
        for c in &self.chi {
            c.functional.check_dim(dim)?;
            k.check(&c.probe)?;
            require_note(&format!("chi functional `{}`", c.label), &c.note)?;
        }
        for s in &self.streams {
            k.check(&s.base)?;
            k.check(&s.step)?;
            require_note(&format!("stream `{}`", s.name), &s.note)?;
        }
        for s in &self.syzygy_entry {
            require_note(&format!("scenario `{}`", s.name), &s.note)?;
            self.syzygy_scenario(Some(&s.name))?;
        }
        for p in &self.pushforward {
            require_note(&format!("pushforward `{}`", p.name), &p.note)?;
            let map = p.map()?;
            if map.matrix.rows() != dim {
                return Err(bad(format!(
                    "pushforward `{}` lands in dimension {}, expected {dim}",
                    p.name,
                    map.matrix.rows()
                )));
            }
        }
        for f in &self.facts {
            require_note(&format!("fact `{}`", f.statement), &f.note)?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug)]
pub struct LoadedEntry {
    pub entry: CatalogEntry,
    /// Source text, kept for digests and self-contained reports.
    pub source: String,
    /// `embedded` or the file path.
    pub origin: String,
}

#[derive(Clone, Debug, Default)]
pub struct Catalog {
    entries: BTreeMap<String, LoadedEntry>,
}

impl Catalog {
    pub fn embedded() -> Result<Self> {
        let mut catalog = Catalog::default();
        for (name, text) in EMBEDDED {
            catalog.insert((*text).to_string(), format!("embedded:{name}"))?;
        }
        Ok(catalog)
    }

    pub fn from_dir(dir: &Path) -> Result<Self> {
        let io = |e: std::io::Error| Error::Io {
            path: dir.display().to_string(),
            message: e.to_string(),
        };
        let mut paths: Vec<_> = std::fs::read_dir(dir)
            .map_err(io)?
            .filter_map(|e| e.ok().map(|e| e.path()))
            .filter(|p| p.extension().is_some_and(|x| x == "toml"))
            .collect();
        paths.sort();
        let mut catalog = Catalog::default();
        for path in paths {
            let text = std::fs::read_to_string(&path).map_err(|e| Error::Io {
                path: path.display().to_string(),
                message: e.to_string(),
            })?;
            catalog.insert(text, path.display().to_string()).map_err(|e| match e {
                Error::Parse { line, message } => Error::Parse {
                    line,
                    message: format!("{}: {message}", path.display()),
                },
                other => other,
            })?;
        }
        Ok(catalog)
    }

    /// The directory named by `CONELAB_DATA`, or the embedded entries.
    pub fn from_env() -> Result<Self> {
        match std::env::var_os(DATA_ENV) {
            Some(dir) if !dir.is_empty() => Catalog::from_dir(Path::new(&dir)),
            _ => Catalog::embedded(),
        }
    }

    fn insert(&mut self, source: String, origin: String) -> Result<()> {
        let entry = CatalogEntry::parse(&source)?;
        if self.entries.contains_key(&entry.name) {
            return Err(Error::DataInconsistency(format!("duplicate catalog entry `{}`", entry.name)));
        }
        self.entries.insert(
            entry.name.clone(),
            LoadedEntry {
                entry,
                source,
                origin,
            },
        );
        Ok(())
    }

    pub fn names(&self) -> Vec<String> {
        self.entries.keys().cloned().collect()
    }

    pub fn loaded(&self, name: &str) -> Result<&LoadedEntry> {
        self.entries.get(name).ok_or_else(|| Error::UnknownEntry {
            name: name.to_string(),
            available: self.names(),
        })
    }

    pub fn get(&self, name: &str) -> Result<&CatalogEntry> {
        self.loaded(name).map(|l| &l.entry)
    }

    pub fn iter(&self) -> impl Iterator<Item = &CatalogEntry> {
        self.entries.values().map(|l| &l.entry)
    }
}

/// Loads one entry from the active catalog.
pub fn load_entry(name: &str) -> Result<CatalogEntry> {
    Catalog::from_env()?.get(name).cloned()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classes::RingFlag;

    #[test]
    fn embedded_entries_load() {
        let c = Catalog::embedded().unwrap();
        assert_eq!(c.names().len(), EMBEDDED.len());
        for (name, _) in EMBEDDED {
            assert_eq!(c.get(name).unwrap().name, *name);
        }
    }

    #[test]
    fn quadric_entry() {
        let e = Catalog::embedded().unwrap().get("quadric-cone-3d").unwrap().clone();
        assert_eq!(e.ring.zeta, 1);
        assert!(e.ring.has(RingFlag::Gorenstein) && e.ring.has(RingFlag::IsolatedSingularity));
        assert_eq!(e.mcm_classes_of_rank(1).len(), 3);
        assert_eq!(e.chi[0].functional.to_string(), "[15, -1]");
        assert_eq!(e.line(None).unwrap().declared_mcm, [-1, 0, 1].into_iter().collect());
    }

    #[test]
    fn veronese_group() {
        let e = Catalog::embedded().unwrap().get("veronese-pinched").unwrap().clone();
        let h = e.presentation.as_ref().unwrap().group().unwrap();
        assert_eq!(h.summary(), "Z + Z/4");
        assert_eq!(e.ring.real_dim(), 1);
        assert!(e.pushforward[0].map().is_ok());
    }

    #[test]
    fn unknown_entry_lists_names() {
        match Catalog::embedded().unwrap().get("nope") {
            Err(Error::UnknownEntry { available, .. }) => assert!(available.contains(&"x2w-yz".to_string())),
            other => panic!("expected unknown entry, got {other:?}"),
        }
    }

    #[test]
    fn entries_round_trip_exactly() {
        for entry in Catalog::embedded().unwrap().iter() {
            let text = entry.to_toml().unwrap();
            let back = CatalogEntry::parse(&text).unwrap();
            assert_eq!(&back, entry);
            assert_eq!(back.to_toml().unwrap(), text, "{}", entry.name);
        }
    }

    #[test]
    fn missing_note_is_rejected() {
        let text = Catalog::embedded().unwrap().loaded("quadric-cone-3d").unwrap().source.clone();
        let broken = text.replacen("note = \"free module\"", "note = \"\"", 1);
        assert!(matches!(CatalogEntry::parse(&broken), Err(Error::DataInconsistency(_))));
    }

    #[test]
    fn inconsistent_presentation_is_rejected() {
        let text = Catalog::embedded().unwrap().loaded("veronese-pinched").unwrap().source.clone();
        let broken = text.replace("rows = [\"[0, 4]\"]", "rows = [\"[0, 6]\"]");
        assert!(matches!(CatalogEntry::parse(&broken), Err(Error::DataInconsistency(_))));
    }
}
