//! On-disk character tables. Files are JSON with every integer written as a
//! decimal string; a loaded table must pass its orthogonality check before
//! it is used.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::sync::Arc;

use num_rational::BigRational;
use serde::{Deserialize, Serialize};

use crate::alternating::{
    an_character_table_with, install_alt_table, AltCharacterTable, AltClass, AltIrrLabel, AltValue,
};
use crate::characters::{character_table, install_table, table_is_loaded, CharacterTable};
use crate::error::{Error, Result};
use crate::partitions::{partition_index, Partition};

pub const FORMAT_VERSION: u32 = 1;
pub const PARTITION_ORDER: &str = "desclex";

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Header {
    pub format_version: u32,
    pub n: usize,
    pub partition_order: String,
}

impl Header {
    fn new(n: usize) -> Self {
        Header {
            format_version: FORMAT_VERSION,
            n,
            partition_order: PARTITION_ORDER.to_string(),
        }
    }

    fn check(&self, n: usize) -> Result<()> {
        if *self != Header::new(n) {
            return Err(Error::Cache(format!(
                "unexpected header {self:?} for n = {n}"
            )));
        }
        Ok(())
    }
}

/// The S_n table file.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SymTableFile {
    pub header: Header,
    pub partitions: Vec<Partition>,
    pub class_sizes: Vec<String>,
    /// One row per irreducible, one column per class.
    pub values: Vec<Vec<String>>,
}

impl SymTableFile {
    pub fn from_table(t: &CharacterTable) -> Self {
        SymTableFile {
            header: Header::new(t.n()),
            partitions: t.partitions().to_vec(),
            class_sizes: t
                .classes()
                .iter()
                .map(|c| c.class_size.to_string())
                .collect(),
            values: (0..t.size())
                .map(|r| t.row(r).iter().map(i64::to_string).collect())
                .collect(),
        }
    }

    /// Rebuilds and checks the table.
    pub fn into_table(self) -> Result<CharacterTable> {
        let n = self.header.n;
        self.header.check(n)?;
        if self.partitions != partition_index(n).partitions() {
            return Err(Error::Cache(
                "partition list is not the canonical order".into(),
            ));
        }
        let values = self
            .values
            .iter()
            .flatten()
            .map(|v| {
                v.parse::<i64>()
                    .map_err(|_| Error::Cache(format!("bad integer {v:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        let t = CharacterTable::from_parts(n, values)?;
        let sizes: Vec<String> = t
            .classes()
            .iter()
            .map(|c| c.class_size.to_string())
            .collect();
        if sizes != self.class_sizes {
            return Err(Error::Cache(
                "class sizes disagree with the partition list".into(),
            ));
        }
        t.check_orthogonality()?;
        Ok(t)
    }
}

/// The A_n table file. A value `[a, b, D]` means `a + b√D`.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct AltTableFile {
    pub header: Header,
    pub branch_swapped: bool,
    pub classes: Vec<String>,
    pub class_sizes: Vec<String>,
    pub characters: Vec<String>,
    pub values: Vec<Vec<[String; 3]>>,
}

impl AltTableFile {
    pub fn from_table(t: &AltCharacterTable) -> Self {
        let width = t.classes().len();
        AltTableFile {
            header: Header::new(t.n()),
            branch_swapped: t.is_swapped(),
            classes: t.classes().iter().map(AltClass::to_string).collect(),
            class_sizes: t.classes().iter().map(|c| c.size.to_string()).collect(),
            characters: t.labels().iter().map(AltIrrLabel::to_string).collect(),
            values: (0..t.size())
                .map(|r| (0..width).map(|c| t.value(r, c).to_strings()).collect())
                .collect(),
        }
    }

    pub fn into_table(self) -> Result<AltCharacterTable> {
        let n = self.header.n;
        self.header.check(n)?;
        let rational = |s: &str| {
            s.parse::<BigRational>()
                .map_err(|_| Error::Cache(format!("bad rational {s:?}")))
        };
        let values = self
            .values
            .iter()
            .flatten()
            .map(|[a, b, d]| {
                let d = d
                    .parse::<i64>()
                    .map_err(|_| Error::Cache(format!("bad discriminant {d:?}")))?;
                Ok(AltValue {
                    a: rational(a)?,
                    b: rational(b)?,
                    d,
                })
            })
            .collect::<Result<Vec<_>>>()?;
        let t = AltCharacterTable::from_values(n, self.branch_swapped, &values)?;
        let fresh = AltTableFile::from_table(&t);
        if fresh.classes != self.classes
            || fresh.class_sizes != self.class_sizes
            || fresh.characters != self.characters
        {
            return Err(Error::Cache(
                "class or character labels disagree with the canonical order".into(),
            ));
        }
        t.check_orthogonality()?;
        Ok(t)
    }
}

/// What happened when a table was requested through the cache.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CacheEvent {
    /// Already in memory.
    Resident,
    Loaded,
    /// No file; computed and written.
    Miss,
    /// A file was present but unusable; computed and rewritten.
    Rebuilt(String),
}

/// A directory of table files.
#[derive(Clone, Debug)]
pub struct TableCache {
    dir: PathBuf,
}

impl TableCache {
    pub fn new(dir: impl Into<PathBuf>) -> Self {
        TableCache { dir: dir.into() }
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }

    pub fn sym_path(&self, n: usize) -> PathBuf {
        self.dir.join(format!("sym-v{FORMAT_VERSION}-n{n}.json"))
    }

    pub fn alt_path(&self, n: usize, swapped: bool) -> PathBuf {
        let branch = if swapped { "-swapped" } else { "" };
        self.dir
            .join(format!("alt-v{FORMAT_VERSION}-n{n}{branch}.json"))
    }

    /// `Ok(None)` when there is no file.
    pub fn load_sym(&self, n: usize) -> Result<Option<CharacterTable>> {
        let Some(text) = read_optional(&self.sym_path(n))? else {
            return Ok(None);
        };
        let file: SymTableFile = serde_json::from_str(&text)?;
        if file.header.n != n {
            return Err(Error::Cache(format!(
                "file holds n = {}, expected {n}",
                file.header.n
            )));
        }
        file.into_table().map(Some)
    }

    pub fn load_alt(&self, n: usize, swapped: bool) -> Result<Option<AltCharacterTable>> {
        let Some(text) = read_optional(&self.alt_path(n, swapped))? else {
            return Ok(None);
        };
        let file: AltTableFile = serde_json::from_str(&text)?;
        if file.header.n != n || file.branch_swapped != swapped {
            return Err(Error::Cache("file holds a different table".into()));
        }
        file.into_table().map(Some)
    }

    pub fn save_sym(&self, t: &CharacterTable) -> Result<()> {
        write_atomic(
            &self.sym_path(t.n()),
            &serde_json::to_string(&SymTableFile::from_table(t))?,
        )
    }

    pub fn save_alt(&self, t: &AltCharacterTable) -> Result<()> {
        write_atomic(
            &self.alt_path(t.n(), t.is_swapped()),
            &serde_json::to_string(&AltTableFile::from_table(t))?,
        )
    }

    /// The shared S_n table, loading or writing the file as needed. A write
    /// failure is not an error; it only costs time on the next run.
    pub fn sym_table(&self, n: usize) -> Result<(Arc<CharacterTable>, CacheEvent)> {
        if table_is_loaded(n) {
            return Ok((character_table(n)?, CacheEvent::Resident));
        }
        let event = match self.load_sym(n) {
            Ok(Some(t)) => return Ok((install_table(t), CacheEvent::Loaded)),
            Ok(None) => CacheEvent::Miss,
            Err(e) => CacheEvent::Rebuilt(e.to_string()),
        };
        let t = character_table(n)?;
        let _ = self.save_sym(&t);
        Ok((t, event))
    }

    pub fn alt_table(
        &self,
        n: usize,
        swapped: bool,
    ) -> Result<(Arc<AltCharacterTable>, CacheEvent)> {
        let event = match self.load_alt(n, swapped) {
            Ok(Some(t)) => return Ok((install_alt_table(t), CacheEvent::Loaded)),
            Ok(None) => CacheEvent::Miss,
            Err(e) => CacheEvent::Rebuilt(e.to_string()),
        };
        let t = an_character_table_with(n, swapped)?;
        let _ = self.save_alt(&t);
        Ok((t, event))
    }
}

fn read_optional(path: &Path) -> Result<Option<String>> {
    match fs::read_to_string(path) {
        Ok(s) => Ok(Some(s)),
        Err(e) if e.kind() == std::io::ErrorKind::NotFound => Ok(None),
        Err(e) => Err(e.into()),
    }
}

fn write_atomic(path: &Path, text: &str) -> Result<()> {
    let dir = path.parent().unwrap_or(Path::new("."));
    fs::create_dir_all(dir)?;
    let tmp = path.with_extension(format!("tmp{}", std::process::id()));
    let mut f = fs::File::create(&tmp)?;
    f.write_all(text.as_bytes())?;
    f.sync_all()?;
    fs::rename(&tmp, path)?;
    Ok(())
}

/// `a + b√D` as a rational triple, for callers reading files by hand.
pub fn parse_triple(a: &str, b: &str, d: &str) -> Result<AltValue> {
    let r = |s: &str| {
        s.parse::<BigRational>()
            .map_err(|_| Error::Cache(format!("bad rational {s:?}")))
    };
    Ok(AltValue {
        a: r(a)?,
        b: r(b)?,
        d: d.parse()
            .map_err(|_| Error::Cache(format!("bad integer {d:?}")))?,
    })
}
