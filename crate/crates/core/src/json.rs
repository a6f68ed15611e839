//! External JSON documents. Cycle sets, solutions and permutations use
//! 1-based points; brace tables are 0-based with neutral element 0.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::axbuilder::AXBrace;
use crate::brace::{BraceError, FiniteBrace};
use crate::cycleset::{CycleSetError, CycleSetTable};
use crate::perm::Permutation;
use crate::permgroup::{GroupError, PermGroup, DEFAULT_CAP};
use crate::solution::{SolutionError, SolutionTable};

#[derive(Debug, Error)]
pub enum JsonError {
    #[error("malformed JSON: {0}")]
    Parse(#[from] serde_json::Error),
    #[error("declared size {declared} does not match {actual} rows")]
    SizeMismatch { declared: usize, actual: usize },
    #[error("entry 0 is not a 1-based point")]
    ZeroEntry,
    #[error("document is neither a cycle set nor a solution")]
    UnknownDocument,
    #[error(transparent)]
    CycleSet(#[from] CycleSetError),
    #[error(transparent)]
    Solution(#[from] SolutionError),
    #[error(transparent)]
    Brace(#[from] BraceError),
    #[error(transparent)]
    Group(#[from] GroupError),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CycleSetJson {
    pub n: usize,
    /// `sigma[i][j]` is the 1-based image `σ(i+1)(j+1)`.
    pub sigma: Vec<Vec<usize>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SolutionJson {
    pub n: usize,
    pub left: Vec<Vec<usize>>,
    pub right: Vec<Vec<usize>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BraceJson {
    pub order: usize,
    pub add: Vec<Vec<usize>>,
    pub circle: Vec<Vec<usize>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AXBraceJson {
    #[serde(flatten)]
    pub brace: BraceJson,
    /// Brace element of `σ(x)` for each point `x`.
    pub sigma: Vec<usize>,
    /// The permutation of each brace element.
    pub perms: Vec<Permutation>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupJson {
    pub degree: usize,
    pub generators: Vec<Permutation>,
}

fn shift_down(rows: &[Vec<usize>]) -> Result<Vec<Vec<usize>>, JsonError> {
    rows.iter()
        .map(|row| row.iter().map(|&v| v.checked_sub(1).ok_or(JsonError::ZeroEntry)).collect())
        .collect()
}

fn shift_up(rows: &[Vec<usize>]) -> Vec<Vec<usize>> {
    rows.iter().map(|row| row.iter().map(|&v| v + 1).collect()).collect()
}

fn check_size(declared: usize, rows: &[Vec<usize>]) -> Result<(), JsonError> {
    if declared != rows.len() {
        return Err(JsonError::SizeMismatch { declared, actual: rows.len() });
    }
    Ok(())
}

impl From<&CycleSetTable> for CycleSetJson {
    fn from(cs: &CycleSetTable) -> Self {
        CycleSetJson { n: cs.size(), sigma: shift_up(&cs.to_table()) }
    }
}

impl CycleSetJson {
    pub fn to_cycle_set(&self) -> Result<CycleSetTable, JsonError> {
        check_size(self.n, &self.sigma)?;
        Ok(CycleSetTable::verify(&shift_down(&self.sigma)?)?)
    }
}

impl From<&SolutionTable> for SolutionJson {
    fn from(sol: &SolutionTable) -> Self {
        SolutionJson { n: sol.size(), left: shift_up(sol.left()), right: shift_up(sol.right()) }
    }
}

impl SolutionJson {
    pub fn to_solution(&self) -> Result<SolutionTable, JsonError> {
        check_size(self.n, &self.left)?;
        check_size(self.n, &self.right)?;
        Ok(SolutionTable::verify(shift_down(&self.left)?, shift_down(&self.right)?)?)
    }
}

impl From<&FiniteBrace> for BraceJson {
    fn from(b: &FiniteBrace) -> Self {
        BraceJson { order: b.order(), add: b.add_table(), circle: b.circle_table() }
    }
}

impl BraceJson {
    pub fn to_brace(&self) -> Result<FiniteBrace, JsonError> {
        check_size(self.order, &self.add)?;
        check_size(self.order, &self.circle)?;
        Ok(FiniteBrace::verify(&self.add, &self.circle)?)
    }
}

impl From<&AXBrace> for AXBraceJson {
    fn from(ax: &AXBrace) -> Self {
        AXBraceJson {
            brace: ax.brace().into(),
            sigma: ax.sigma_map().to_vec(),
            perms: ax.perms().to_vec(),
        }
    }
}

impl From<&PermGroup> for GroupJson {
    fn from(g: &PermGroup) -> Self {
        GroupJson { degree: g.degree(), generators: g.generators().to_vec() }
    }
}

impl GroupJson {
    /// Recomputes the elements from the generators.
    pub fn to_group(&self) -> Result<PermGroup, JsonError> {
        if let Some(g) = self.generators.iter().find(|g| g.degree() != self.degree) {
            return Err(GroupError::DegreeMismatch { got: g.degree(), expected: self.degree }.into());
        }
        Ok(PermGroup::close(&self.generators, self.degree, DEFAULT_CAP)?)
    }
}

/// A validated input document.
#[derive(Debug, Clone)]
pub enum Document {
    CycleSet(CycleSetTable),
    Solution(SolutionTable),
}

/// Parses a cycle-set or solution document, telling them apart by their keys.
pub fn parse_document(text: &str) -> Result<Document, JsonError> {
    let value: serde_json::Value = serde_json::from_str(text)?;
    let has = |k: &str| value.get(k).is_some();
    if has("sigma") {
        let doc: CycleSetJson = serde_json::from_value(value)?;
        Ok(Document::CycleSet(doc.to_cycle_set()?))
    } else if has("left") && has("right") {
        let doc: SolutionJson = serde_json::from_value(value)?;
        Ok(Document::Solution(doc.to_solution()?))
    } else {
        Err(JsonError::UnknownDocument)
    }
}

pub fn parse_cycle_set(text: &str) -> Result<CycleSetTable, JsonError> {
    serde_json::from_str::<CycleSetJson>(text)?.to_cycle_set()
}

/// One line of newline-delimited output.
pub fn cycle_set_line(cs: &CycleSetTable) -> String {
    serde_json::to_string(&CycleSetJson::from(cs)).expect("plain data serializes")
}
