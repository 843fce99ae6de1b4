//! Abstract simplicial complexes and reduced homology with field
//! coefficients.

use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::linalg::{is_prime, rank_mod_prime, rank_rational, IntMatrix};

/// Coefficients for homology: ℚ or 𝔽_p.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub enum CoefficientSpec {
    #[default]
    Rationals,
    PrimeField(u64),
}

impl CoefficientSpec {
    pub fn prime_field(p: u64) -> Result<CoefficientSpec> {
        if !is_prime(p) || p >= 1 << 32 {
            return Err(Error::InvalidArgument(format!(
                "{p} is not a supported prime"
            )));
        }
        Ok(CoefficientSpec::PrimeField(p))
    }
}

impl fmt::Display for CoefficientSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CoefficientSpec::Rationals => f.write_str("q"),
            CoefficientSpec::PrimeField(p) => write!(f, "fp:{p}"),
        }
    }
}

impl FromStr for CoefficientSpec {
    type Err = Error;

    /// `q` for the rationals, `fp:<p>` for the prime field of order `p`.
    fn from_str(s: &str) -> Result<CoefficientSpec> {
        if s == "q" || s == "Q" {
            return Ok(CoefficientSpec::Rationals);
        }
        let p = s
            .strip_prefix("fp:")
            .and_then(|p| p.parse::<u64>().ok())
            .ok_or_else(|| {
                Error::InvalidArgument(format!("bad coefficient spec `{s}`; use q or fp:<prime>"))
            })?;
        CoefficientSpec::prime_field(p)
    }
}

/// A finite simplicial complex, stored as its full face family.
///
/// `faces[d + 1]` lists the `d`-dimensional faces as sorted vertex lists in
/// lexicographic order; `faces[0]` is always `[[]]`, the empty face.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplicialComplex {
    vertex_count: usize,
    faces: Vec<Vec<Vec<usize>>>,
}

impl SimplicialComplex {
    /// Downward closure of `facets` on vertices `0..vertex_count`.
    pub fn from_facets(vertex_count: usize, facets: &[Vec<usize>]) -> Result<SimplicialComplex> {
        let mut by_dim: Vec<BTreeSet<Vec<usize>>> = vec![BTreeSet::from([Vec::new()])];
        for facet in facets {
            let mut f = facet.clone();
            f.sort_unstable();
            f.dedup();
            if let Some(&v) = f.iter().find(|&&v| v >= vertex_count) {
                return Err(Error::InvalidArgument(format!("vertex {v} out of range")));
            }
            if f.len() > 24 {
                return Err(Error::InvalidArgument("facet too large to close".into()));
            }
            for mask in 1u32..(1 << f.len()) {
                let face: Vec<usize> = (0..f.len())
                    .filter(|&i| mask >> i & 1 == 1)
                    .map(|i| f[i])
                    .collect();
                let d = face.len();
                if by_dim.len() <= d {
                    by_dim.resize(d + 1, BTreeSet::new());
                }
                by_dim[d].insert(face);
            }
        }
        Ok(SimplicialComplex {
            vertex_count,
            faces: by_dim
                .into_iter()
                .map(|s| s.into_iter().collect())
                .collect(),
        })
    }

    /// Builds from an already closed face family (the empty face may be
    /// omitted). Faces must be sorted vertex lists.
    pub(crate) fn from_closed_faces(
        vertex_count: usize,
        faces: impl IntoIterator<Item = Vec<usize>>,
    ) -> SimplicialComplex {
        let mut by_dim: Vec<BTreeSet<Vec<usize>>> = vec![BTreeSet::from([Vec::new()])];
        for f in faces {
            debug_assert!(f.windows(2).all(|w| w[0] < w[1]));
            let d = f.len();
            if by_dim.len() <= d {
                by_dim.resize(d + 1, BTreeSet::new());
            }
            by_dim[d].insert(f);
        }
        SimplicialComplex {
            vertex_count,
            faces: by_dim
                .into_iter()
                .map(|s| s.into_iter().collect())
                .collect(),
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    /// Dimension; `-1` when only the empty face is present.
    pub fn dimension(&self) -> isize {
        self.faces.len() as isize - 2
    }

    /// Faces of dimension `d` (`d >= -1`).
    pub fn faces(&self, d: isize) -> &[Vec<usize>] {
        usize::try_from(d + 1)
            .ok()
            .and_then(|i| self.faces.get(i))
            .map_or(&[], Vec::as_slice)
    }

    /// Number of faces per dimension, starting at dimension `-1`.
    pub fn face_counts(&self) -> Vec<usize> {
        self.faces.iter().map(Vec::len).collect()
    }

    /// Maximal faces.
    pub fn facets(&self) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        for d in 0..self.faces.len() {
            let bigger: Option<&Vec<Vec<usize>>> = self.faces.get(d + 1);
            for f in &self.faces[d] {
                let covered = bigger.is_some_and(|b| {
                    b.iter()
                        .any(|g| f.iter().all(|v| g.binary_search(v).is_ok()))
                });
                if !covered {
                    out.push(f.clone());
                }
            }
        }
        out
    }

    /// `Σ_{d ≥ -1} (-1)^d f_d`.
    pub fn reduced_euler_characteristic(&self) -> i64 {
        self.faces
            .iter()
            .enumerate()
            .map(|(i, fs)| {
                if i % 2 == 0 {
                    -(fs.len() as i64)
                } else {
                    fs.len() as i64
                }
            })
            .sum()
    }

    /// Boundary map from dimension `d` to `d - 1` as a matrix with one row
    /// per `(d-1)`-face and one column per `d`-face. For `d = 0` this is the
    /// augmentation onto the empty face.
    pub fn boundary_matrix(&self, d: isize) -> IntMatrix {
        let cols = self.faces(d);
        let rows = self.faces(d - 1);
        let index: HashMap<&[usize], usize> = rows
            .iter()
            .enumerate()
            .map(|(i, f)| (f.as_slice(), i))
            .collect();
        let mut m = vec![vec![0i64; cols.len()]; rows.len()];
        for (j, face) in cols.iter().enumerate() {
            for skip in 0..face.len() {
                let sub: Vec<usize> = face
                    .iter()
                    .enumerate()
                    .filter(|&(i, _)| i != skip)
                    .map(|(_, &v)| v)
                    .collect();
                let i = index[sub.as_slice()];
                m[i][j] = if skip % 2 == 0 { 1 } else { -1 };
            }
        }
        m
    }

    fn boundary_rank(&self, d: isize, k: CoefficientSpec) -> usize {
        if d < 0 || d > self.dimension() {
            return 0;
        }
        let m = self.boundary_matrix(d);
        match k {
            CoefficientSpec::Rationals => rank_rational(&m),
            CoefficientSpec::PrimeField(p) => rank_mod_prime(&m, p),
        }
    }

    /// Reduced Betti number in a single dimension.
    pub fn betti(&self, d: isize, k: CoefficientSpec) -> usize {
        if d < -1 || d > self.dimension() {
            return 0;
        }
        self.faces(d).len() - self.boundary_rank(d, k) - self.boundary_rank(d + 1, k)
    }

    /// Reduced Betti numbers in every dimension `-1..=dim`.
    pub fn reduced_homology(&self, k: CoefficientSpec) -> HomologyProfile {
        let dim = self.dimension();
        let ranks: Vec<usize> = (-1..=dim + 1).map(|d| self.boundary_rank(d, k)).collect();
        let betti = (-1..=dim)
            .map(|d| {
                let i = (d + 1) as usize;
                self.faces(d).len() - ranks[i] - ranks[i + 1]
            })
            .collect();
        HomologyProfile {
            coefficients: k,
            betti,
        }
    }
}

/// Reduced Betti numbers by dimension, starting at `-1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomologyProfile {
    pub coefficients: CoefficientSpec,
    betti: Vec<usize>,
}

impl HomologyProfile {
    pub fn betti(&self, d: isize) -> usize {
        usize::try_from(d + 1)
            .ok()
            .and_then(|i| self.betti.get(i))
            .copied()
            .unwrap_or(0)
    }

    /// Betti numbers for dimensions `-1, 0, 1, …`.
    pub fn values(&self) -> &[usize] {
        &self.betti
    }

    pub fn max_dimension(&self) -> isize {
        self.betti.len() as isize - 2
    }

    pub fn is_acyclic(&self) -> bool {
        self.betti.iter().all(|&b| b == 0)
    }

    /// `Σ (-1)^d β_d`, which must match the face-count Euler characteristic.
    pub fn reduced_euler_characteristic(&self) -> i64 {
        self.betti
            .iter()
            .enumerate()
            .map(|(i, &b)| if i % 2 == 0 { -(b as i64) } else { b as i64 })
            .sum()
    }
}

impl fmt::Display for HomologyProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "coefficients = {}", self.coefficients)?;
        for (i, b) in self.betti.iter().enumerate() {
            writeln!(f, "betti[{}] = {b}", i as isize - 1)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const Q: CoefficientSpec = CoefficientSpec::Rationals;

    fn hexagon() -> SimplicialComplex {
        let edges: Vec<Vec<usize>> = (0..6).map(|i| vec![i, (i + 1) % 6]).collect();
        SimplicialComplex::from_facets(6, &edges).unwrap()
    }

    #[test]
    fn circle() {
        let c = hexagon();
        assert_eq!(c.face_counts(), vec![1, 6, 6]);
        let h = c.reduced_homology(Q);
        assert_eq!(h.values(), &[0, 0, 1]);
        assert_eq!(
            h.reduced_euler_characteristic(),
            c.reduced_euler_characteristic()
        );
    }

    #[test]
    fn point_and_empty() {
        let pt = SimplicialComplex::from_facets(1, &[vec![0]]).unwrap();
        assert!(pt.reduced_homology(Q).is_acyclic());
        let empty = SimplicialComplex::from_facets(0, &[]).unwrap();
        assert_eq!(empty.dimension(), -1);
        let h = empty.reduced_homology(Q);
        assert_eq!(h.betti(-1), 1);
        assert_eq!(h.values(), &[1]);
    }

    #[test]
    fn projective_plane_torsion_shows_mod_two() {
        // 6-vertex RP^2
        let tris = [
            [0, 1, 2],
            [0, 2, 3],
            [0, 3, 4],
            [0, 4, 5],
            [0, 5, 1],
            [1, 2, 4],
            [2, 3, 5],
            [3, 4, 1],
            [4, 5, 2],
            [5, 1, 3],
        ];
        let facets: Vec<Vec<usize>> = tris.iter().map(|t| t.to_vec()).collect();
        let c = SimplicialComplex::from_facets(6, &facets).unwrap();
        assert!(c.reduced_homology(Q).is_acyclic());
        let h2 = c.reduced_homology(CoefficientSpec::PrimeField(2));
        assert_eq!(h2.values(), &[0, 0, 1, 1]);
        assert_eq!(c.betti(2, CoefficientSpec::PrimeField(3)), 0);
    }

    #[test]
    fn facets_recovered() {
        let c = hexagon();
        assert_eq!(c.facets().len(), 6);
        let two_points = SimplicialComplex::from_facets(2, &[vec![0], vec![1]]).unwrap();
        assert_eq!(two_points.reduced_homology(Q).betti(0), 1);
    }

    #[test]
    fn coefficient_parsing() {
        assert_eq!(
            "q".parse::<CoefficientSpec>().unwrap(),
            CoefficientSpec::Rationals
        );
        assert_eq!(
            "fp:3".parse::<CoefficientSpec>().unwrap(),
            CoefficientSpec::PrimeField(3)
        );
        assert!("fp:4".parse::<CoefficientSpec>().is_err());
        assert!("z".parse::<CoefficientSpec>().is_err());
        assert_eq!(CoefficientSpec::PrimeField(5).to_string(), "fp:5");
    }

    #[test]
    fn profile_display() {
        let text = hexagon().reduced_homology(Q).to_string();
        assert_eq!(
            text,
            "coefficients = q\nbetti[-1] = 0\nbetti[0] = 0\nbetti[1] = 1\n"
        );
    }
}
