//! Random instance collections: a repetition × order × density sweep of
//! G(n, d) graphs drawn from one advancing ChaCha8 stream.

use std::fmt;
use std::str::FromStr;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::{BenchError, Instance};
use crate::graph::gen_random_with;

/// Tolerance on density bounds, so that `0.1 + 4 * 0.2` meets `0.9`.
const DENSITY_EPS: f64 = 1e-9;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct GenRnSpec {
    pub repetitions: usize,
    pub n_start: usize,
    pub n_step: usize,
    /// Exclusive upper bound on the order.
    pub n_end: usize,
    pub d_start: f64,
    pub d_step: f64,
    pub d_end: f64,
    /// Whether a density equal to `d_end` is generated.
    pub d_end_inclusive: bool,
    pub seed: u64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Preset {
    C1,
    C2,
    C3,
}

impl Preset {
    pub fn spec(self) -> GenRnSpec {
        let (repetitions, n_start, n_step, n_end) = match self {
            Preset::C1 => (100, 250, 250, 999),
            Preset::C2 => (50, 1000, 500, 9999),
            Preset::C3 => (10, 10000, 5000, 50000),
        };
        GenRnSpec {
            repetitions,
            n_start,
            n_step,
            n_end,
            d_start: 0.1,
            d_step: 0.2,
            d_end: 0.9,
            d_end_inclusive: true,
            seed: 1,
        }
    }
}

impl FromStr for Preset {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s.to_ascii_lowercase().as_str() {
            "c1" => Ok(Preset::C1),
            "c2" => Ok(Preset::C2),
            "c3" => Ok(Preset::C3),
            _ => Err(format!("unknown preset `{s}` (expected c1, c2 or c3)")),
        }
    }
}

impl GenRnSpec {
    /// Checks step sizes, bounds and the density range.
    pub fn validate(&self) -> Result<(), BenchError> {
        let bad = |m: &str| Err(BenchError::InvalidSpec(m.to_string()));
        if self.n_step == 0 {
            return bad("order step must be positive");
        }
        // Written negated so that NaN is rejected too.
        #[allow(clippy::neg_cmp_op_on_partial_ord)]
        if !(self.d_step > 0.0) {
            return bad("density step must be positive");
        }
        if !(0.0..=1.0).contains(&self.d_start) || !self.d_end.is_finite() {
            return bad("densities must lie in [0, 1]");
        }
        if self.densities().last().is_some_and(|&d| d > 1.0) {
            return bad("density sweep exceeds 1");
        }
        Ok(())
    }

    pub fn orders(&self) -> Vec<usize> {
        if self.n_step == 0 {
            return Vec::new();
        }
        (self.n_start..self.n_end).step_by(self.n_step).collect()
    }

    /// Densities `d_start + k·d_step` below (or up to) `d_end`, computed by
    /// index rather than accumulation and rounded to 12 decimals.
    pub fn densities(&self) -> Vec<f64> {
        let mut out = Vec::new();
        #[allow(clippy::neg_cmp_op_on_partial_ord)]
        if !(self.d_step > 0.0) {
            return out;
        }
        for k in 0.. {
            let d = ((self.d_start + k as f64 * self.d_step) * 1e12).round() / 1e12;
            let inside = if self.d_end_inclusive {
                d <= self.d_end + DENSITY_EPS
            } else {
                d < self.d_end - DENSITY_EPS
            };
            if !inside {
                break;
            }
            out.push(d);
        }
        out
    }

    /// Divides the order sweep by `divisor` (step at least 1).
    pub fn scaled(mut self, divisor: usize) -> Self {
        let divisor = divisor.max(1);
        self.n_start /= divisor;
        self.n_step = (self.n_step / divisor).max(1);
        self.n_end /= divisor;
        self
    }

    pub fn with_repetitions(mut self, repetitions: usize) -> Self {
        self.repetitions = repetitions;
        self
    }

    pub fn len(&self) -> usize {
        self.repetitions * self.orders().len() * self.densities().len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

impl fmt::Display for GenRnSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{},{},{},{},{},{},{}{},{}",
            self.repetitions,
            self.n_start,
            self.n_step,
            self.n_end,
            self.d_start,
            self.d_step,
            self.d_end,
            if self.d_end_inclusive { "" } else { ")" },
            self.seed
        )
    }
}

impl FromStr for GenRnSpec {
    type Err = BenchError;

    /// `n_rpt,n0,nI,nN,d0,dI,dN,seed`. `dN` is inclusive unless suffixed
    /// with `)`, e.g. `0.9)`.
    fn from_str(s: &str) -> Result<Self, BenchError> {
        let bad = |m: String| BenchError::InvalidSpec(m);
        let fields: Vec<&str> = s.split(',').map(str::trim).collect();
        if fields.len() != 8 {
            return Err(bad(format!(
                "expected 8 comma-separated fields, found {}",
                fields.len()
            )));
        }
        let int = |i: usize| {
            fields[i]
                .parse::<usize>()
                .map_err(|e| bad(format!("field {}: {e}", i + 1)))
        };
        let float = |t: &str, i: usize| t.parse::<f64>().map_err(|e| bad(format!("field {}: {e}", i + 1)));
        let (d_end_text, d_end_inclusive) = match fields[6].strip_suffix(')') {
            Some(t) => (t, false),
            None => (fields[6].strip_suffix(']').unwrap_or(fields[6]), true),
        };
        let spec = GenRnSpec {
            repetitions: int(0)?,
            n_start: int(1)?,
            n_step: int(2)?,
            n_end: int(3)?,
            d_start: float(fields[4], 4)?,
            d_step: float(fields[5], 5)?,
            d_end: float(d_end_text, 6)?,
            d_end_inclusive,
            seed: fields[7].parse().map_err(|e| bad(format!("field 8: {e}")))?,
        };
        spec.validate()?;
        Ok(spec)
    }
}

/// Generates the collection: repetitions outermost, then orders, then
/// densities. Ids read `rn_n<order>_d<density>_r<repetition>`.
pub fn gen_collection(spec: &GenRnSpec) -> Result<Vec<Instance>, BenchError> {
    spec.validate()?;
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    let orders = spec.orders();
    let densities = spec.densities();
    let mut out = Vec::with_capacity(spec.len());
    for rep in 0..spec.repetitions {
        for &n in &orders {
            for &d in &densities {
                let graph = gen_random_with(&mut rng, n, d)?;
                out.push(Instance {
                    id: format!("rn_n{n}_d{d:.2}_r{rep}"),
                    graph,
                });
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn preset_sweeps() {
        let c1 = Preset::C1.spec();
        assert_eq!(c1.orders(), vec![250, 500, 750]);
        assert_eq!(c1.densities(), vec![0.1, 0.3, 0.5, 0.7, 0.9]);
        assert_eq!(c1.len(), 100 * 15);

        let c3 = Preset::C3.spec();
        assert_eq!(c3.orders().len(), 8);
        assert_eq!(Preset::C2.spec().orders().len(), 18);

        let exclusive = GenRnSpec {
            d_end_inclusive: false,
            ..c1
        };
        assert_eq!(exclusive.densities(), vec![0.1, 0.3, 0.5, 0.7]);
    }

    #[test]
    fn scaling() {
        let s = Preset::C1.spec().scaled(5);
        assert_eq!(s.orders(), vec![50, 100, 150]);
        assert_eq!(Preset::C1.spec().scaled(1).orders(), vec![250, 500, 750]);
    }

    #[test]
    fn exclusive_single_repetition_has_twelve_graphs() {
        let spec = GenRnSpec {
            d_end_inclusive: false,
            ..Preset::C1.spec().with_repetitions(1).scaled(10)
        };
        let graphs = gen_collection(&spec).unwrap();
        assert_eq!(graphs.len(), 12);
        assert_eq!(graphs[0].id, "rn_n25_d0.10_r0");
        assert_eq!(graphs[11].id, "rn_n75_d0.70_r0");
    }

    #[test]
    fn zero_repetitions_and_determinism() {
        let spec = Preset::C1.spec().with_repetitions(0);
        assert!(gen_collection(&spec).unwrap().is_empty());

        let spec = Preset::C1.spec().with_repetitions(2).scaled(10);
        let a = gen_collection(&spec).unwrap();
        let b = gen_collection(&spec).unwrap();
        assert_eq!(a.len(), 30);
        for (x, y) in a.iter().zip(&b) {
            assert_eq!(x.id, y.id);
            assert_eq!(x.graph, y.graph);
        }
        // The stream advances: repeated (n, d) cells differ.
        assert_ne!(a[0].graph, a[15].graph);
    }

    #[test]
    fn parse_spec() {
        let s: GenRnSpec = "1,250,250,999,0.1,0.2,0.9,42".parse().unwrap();
        assert_eq!(s.len(), 15);
        assert_eq!(s.seed, 42);
        let s: GenRnSpec = "1,250,250,999,0.1,0.2,0.9),42".parse().unwrap();
        assert_eq!(s.len(), 12);
        assert_eq!(s.to_string(), "1,250,250,999,0.1,0.2,0.9),42");
        assert!("1,250,0,999,0.1,0.2,0.9,42".parse::<GenRnSpec>().is_err());
        assert!("1,250,250,999,0.1,0.0,0.9,42".parse::<GenRnSpec>().is_err());
        assert!("1,250,250,999,0.1,0.2,1.5,42".parse::<GenRnSpec>().is_err());
        assert!("1,2,3".parse::<GenRnSpec>().is_err());
    }
}
