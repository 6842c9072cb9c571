use num_traits::{Signed, Zero};

use crate::rational::{format_rational, Extended, Rational};
use crate::{Error, Result};

/// Affine piece `p(x) = value + slope·(x − start)` on `[start, next start)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DensitySegment {
    pub start: Rational,
    pub value: Rational,
    pub slope: Rational,
}

impl DensitySegment {
    pub fn new(start: Rational, value: Rational, slope: Rational) -> Self {
        DensitySegment { start, value, slope }
    }

    fn at(&self, x: &Rational) -> Rational {
        &self.value + &self.slope * (x - &self.start)
    }
}

/// Nondecreasing, right-continuous, piecewise-affine density `p ≥ 0` on
/// `[0, limit)`; `p = +∞` beyond `limit` when one is set.
///
/// Jumps are allowed between segments. The canonical form merges segments
/// that continue each other without a jump or a change of slope.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Density {
    segments: Vec<DensitySegment>,
    limit: Option<Rational>,
}

/// Last move of a monotone graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) enum Ray {
    /// `(1, slope)` with `slope >= 0`.
    Slope(Rational),
    Vertical,
}

impl Density {
    pub fn new(segments: Vec<DensitySegment>, limit: Option<Rational>) -> Result<Self> {
        let first = segments
            .first()
            .ok_or_else(|| Error::InvalidFunction("density without segments".into()))?;
        if !first.start.is_zero() {
            return Err(Error::InvalidFunction("density must start at 0".into()));
        }
        for s in &segments {
            if s.value.is_negative() || s.slope.is_negative() {
                return Err(Error::InvalidFunction(format!(
                    "segment at {} is negative or decreasing",
                    format_rational(&s.start)
                )));
            }
        }
        for w in segments.windows(2) {
            if w[0].start >= w[1].start {
                return Err(Error::InvalidFunction("segment starts must increase strictly".into()));
            }
            if w[0].at(&w[1].start) > w[1].value {
                return Err(Error::InvalidFunction(format!(
                    "density decreases across {}",
                    format_rational(&w[1].start)
                )));
            }
        }
        if let Some(limit) = &limit {
            if limit <= &segments.last().expect("nonempty").start {
                return Err(Error::InvalidFunction("limit must exceed the last segment start".into()));
            }
        }
        Ok(Density::canonical(segments, limit))
    }

    fn canonical(segments: Vec<DensitySegment>, limit: Option<Rational>) -> Self {
        let mut out: Vec<DensitySegment> = Vec::with_capacity(segments.len());
        for s in segments {
            match out.last() {
                Some(prev) if prev.slope == s.slope && prev.at(&s.start) == s.value => {}
                _ => out.push(s),
            }
        }
        Density { segments: out, limit }
    }

    /// `p(t) = slope·t`.
    pub fn linear(slope: Rational) -> Self {
        Density {
            segments: vec![DensitySegment::new(Rational::zero(), Rational::zero(), slope)],
            limit: None,
        }
    }

    pub fn segments(&self) -> &[DensitySegment] {
        &self.segments
    }

    pub fn limit(&self) -> Option<&Rational> {
        self.limit.as_ref()
    }

    fn segment_index(&self, x: &Rational) -> usize {
        self.segments.partition_point(|s| &s.start <= x).saturating_sub(1)
    }

    /// `p(x)` for `x >= 0`.
    pub fn value_at(&self, x: &Rational) -> Extended {
        match &self.limit {
            Some(limit) if x >= limit => Extended::Infinity,
            _ => Extended::Finite(self.segments[self.segment_index(x)].at(x)),
        }
    }

    pub(crate) fn segment_index_of(&self, x: &Rational) -> usize {
        self.segment_index(x)
    }

    pub fn is_zero(&self) -> bool {
        self.limit.is_none() && self.segments.iter().all(|s| s.value.is_zero() && s.slope.is_zero())
    }

    /// Completed graph as a monotone polyline from `(0, 0)`: jumps become
    /// vertical moves, and the graph ends in a ray.
    pub(crate) fn to_chain(&self) -> (Vec<(Rational, Rational)>, Ray) {
        let mut chain = vec![(Rational::zero(), Rational::zero())];
        for (i, seg) in self.segments.iter().enumerate() {
            chain.push((seg.start.clone(), seg.value.clone()));
            let end = match self.segments.get(i + 1) {
                Some(next) => Some(next.start.clone()),
                None => self.limit.clone(),
            };
            if let Some(end) = end {
                let y = seg.at(&end);
                chain.push((end, y));
            }
        }
        let ray = match &self.limit {
            Some(_) => Ray::Vertical,
            None => Ray::Slope(self.segments.last().expect("nonempty").slope.clone()),
        };
        (simplify_chain(chain, &ray), ray)
    }

    pub(crate) fn from_chain(chain: Vec<(Rational, Rational)>, ray: Ray) -> Result<Self> {
        let chain = simplify_chain(chain, &ray);
        let mut segments = Vec::new();
        for w in chain.windows(2) {
            let (p, q) = (&w[0], &w[1]);
            if q.0 > p.0 {
                segments.push(DensitySegment::new(
                    p.0.clone(),
                    p.1.clone(),
                    (&q.1 - &p.1) / (&q.0 - &p.0),
                ));
            }
        }
        let last = chain.last().expect("chain starts at the origin").clone();
        let limit = match ray {
            Ray::Slope(s) => {
                segments.push(DensitySegment::new(last.0, last.1, s));
                None
            }
            Ray::Vertical => Some(last.0),
        };
        if segments.is_empty() {
            return Err(Error::InvalidFunction("density is infinite on (0, ∞)".into()));
        }
        Density::new(segments, limit)
    }

    /// Right-continuous generalized inverse `q(t) = sup{s : p(s) ≤ t}`:
    /// flat pieces of `p` become jumps of `q` and jumps become flats.
    pub fn generalized_inverse(&self) -> Result<Density> {
        let (chain, ray) = self.to_chain();
        let swapped = chain.into_iter().map(|(x, y)| (y, x)).collect();
        let ray = match ray {
            Ray::Vertical => Ray::Slope(Rational::zero()),
            Ray::Slope(s) if s.is_zero() => Ray::Vertical,
            Ray::Slope(s) => Ray::Slope(s.recip()),
        };
        Density::from_chain(swapped, ray)
    }
}

/// Drops repeated points and vertices interior to straight runs,
/// including a last vertex that the ray continues.
fn simplify_chain(chain: Vec<(Rational, Rational)>, ray: &Ray) -> Vec<(Rational, Rational)> {
    fn collinear(a: &(Rational, Rational), b: &(Rational, Rational), c: &(Rational, Rational)) -> bool {
        (&b.0 - &a.0) * (&c.1 - &b.1) == (&b.1 - &a.1) * (&c.0 - &b.0)
    }
    let mut out: Vec<(Rational, Rational)> = Vec::with_capacity(chain.len());
    for p in chain {
        if out.last() == Some(&p) {
            continue;
        }
        while out.len() >= 2 && collinear(&out[out.len() - 2], &out[out.len() - 1], &p) {
            out.pop();
        }
        out.push(p);
    }
    while out.len() >= 2 {
        let (a, b) = (&out[out.len() - 2], &out[out.len() - 1]);
        let continues = match ray {
            Ray::Vertical => a.0 == b.0,
            Ray::Slope(s) => b.0 > a.0 && (&b.1 - &a.1) == s * (&b.0 - &a.0),
        };
        if continues {
            out.pop();
        } else {
            break;
        }
    }
    out
}
