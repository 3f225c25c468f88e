use std::fmt;

use super::cone::Cone;
use super::lattice::LatVec;
use crate::error::{Error, Result};

/// A subdivision of a cone into full-dimensional cells.
#[derive(Clone, Debug)]
pub struct QuasiFan {
    cells: Vec<Cone>,
}

impl QuasiFan {
    pub fn new(mut cells: Vec<Cone>) -> QuasiFan {
        cells.sort_by(|a, b| a.rays().cmp(b.rays()).then_with(|| a.lineality().cmp(b.lineality())));
        QuasiFan { cells }
    }

    pub fn cells(&self) -> &[Cone] {
        &self.cells
    }

    /// The cone covered by the cells.
    pub fn support(&self) -> Cone {
        let rank = self.cells.first().map(|c| c.rank()).unwrap_or(0);
        let gens: Vec<LatVec> = self.cells.iter().flat_map(|c| c.generators()).collect();
        Cone::new(rank, &gens).expect("rank validated")
    }

    /// Index of a cell equal to `c` as a set.
    pub fn position(&self, c: &Cone) -> Option<usize> {
        self.cells.iter().position(|x| x.same_set(c))
    }

    /// Cells containing `m`.
    pub fn cells_containing(&self, m: &LatVec) -> Vec<&Cone> {
        self.cells.iter().filter(|c| c.contains(m)).collect()
    }
}

impl fmt::Display for QuasiFan {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cs: Vec<String> = self.cells.iter().map(|c| c.to_string()).collect();
        write!(f, "[{}]", cs.join(", "))
    }
}

/// The coarsest common refinement: all full-dimensional pairwise intersections.
pub fn common_refinement(fans: &[QuasiFan]) -> Result<QuasiFan> {
    let Some(first) = fans.first() else {
        return Err(Error::Precondition("no fans to refine".into()));
    };
    let support = first.support();
    let mut cells: Vec<Cone> = first.cells.clone();
    for fan in &fans[1..] {
        if !fan.support().same_set(&support) {
            return Err(Error::InconsistentSupport);
        }
        let mut next: Vec<Cone> = Vec::new();
        for a in &cells {
            for b in &fan.cells {
                let c = a.intersect(b);
                if c.is_full_dim() && !next.iter().any(|x| x.same_set(&c)) {
                    next.push(c);
                }
            }
        }
        cells = next;
    }
    Ok(QuasiFan::new(cells))
}
