//! Unbounded multipliers that keep a convergent series convergent.
//!
//! Given `Σ|x_n| < ∞`, choose thresholds `n_1 < n_2 < ...` with
//! `Σ_{k ≥ n_l} |x_k| < 2^(1-l)` and set `y_n = 1` for `n ≤ n_1` and
//! `y_n = l − 1` on `(n_{l−1}, n_l]`. Then `y_n → ∞` and `Σ|x_n|·y_n`
//! converges. Thresholds are always chosen as small as possible.

use num_traits::{One, Signed, Zero};

use crate::rational::{int, pow2, powi, Rational};
use crate::{Error, Result};

/// Behaviour of a sequence after its explicit head.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SequenceTail {
    /// `x_k = 0` for `k > N`.
    Zero,
    /// `x_k = scale · ratio^k` for `k > N`, with `0 < ratio < 1`.
    Geometric { scale: Rational, ratio: Rational },
}

/// `x_1, x_2, ...` given by an explicit head `x_1..x_N` and a tail rule.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SummableSequence {
    head: Vec<Rational>,
    tail: SequenceTail,
    /// `suffix[i] = Σ_{j ≥ i} |head[j]|`, with a trailing 0.
    suffix: Vec<Rational>,
}

impl SummableSequence {
    pub fn new(head: Vec<Rational>, tail: SequenceTail) -> Result<Self> {
        if let SequenceTail::Geometric { scale, ratio } = &tail {
            if !scale.is_positive() || !ratio.is_positive() || ratio >= &Rational::one() {
                return Err(Error::InvalidFunction("geometric tail needs scale > 0 and 0 < ratio < 1".into()));
            }
        }
        let mut suffix = vec![Rational::zero(); head.len() + 1];
        for i in (0..head.len()).rev() {
            suffix[i] = &suffix[i + 1] + head[i].abs();
        }
        Ok(SummableSequence { head, tail, suffix })
    }

    pub fn finite(head: Vec<Rational>) -> Self {
        SummableSequence::new(head, SequenceTail::Zero).expect("finite sequences are valid")
    }

    /// `x_k = scale · ratio^k` for every `k ≥ 1`.
    pub fn geometric(scale: Rational, ratio: Rational) -> Result<Self> {
        SummableSequence::new(Vec::new(), SequenceTail::Geometric { scale, ratio })
    }

    pub fn head(&self) -> &[Rational] {
        &self.head
    }

    pub fn tail(&self) -> &SequenceTail {
        &self.tail
    }

    /// `x_k` for `k ≥ 1`.
    pub fn term(&self, k: usize) -> Rational {
        assert!(k >= 1, "sequences are indexed from 1");
        match (self.head.get(k - 1), &self.tail) {
            (Some(x), _) => x.clone(),
            (None, SequenceTail::Zero) => Rational::zero(),
            (None, SequenceTail::Geometric { scale, ratio }) => scale * powi(ratio, k as i64),
        }
    }

    /// `Σ_{k ≥ n} |x_k|`, exact.
    pub fn tail_sum(&self, n: usize) -> Rational {
        assert!(n >= 1, "sequences are indexed from 1");
        let len = self.head.len();
        let head = self.suffix[(n - 1).min(len)].clone();
        match &self.tail {
            SequenceTail::Zero => head,
            SequenceTail::Geometric { scale, ratio } => {
                let from = n.max(len + 1) as i64;
                head + scale * powi(ratio, from) / (Rational::one() - ratio)
            }
        }
    }

    pub fn total(&self) -> Rational {
        self.tail_sum(1)
    }
}

/// The thresholds `n_l` and multipliers `y_n` for one sequence.
#[derive(Debug, Clone)]
pub struct ScalerResult {
    sequence: SummableSequence,
}

pub fn summable_scaler(x: &SummableSequence) -> ScalerResult {
    ScalerResult { sequence: x.clone() }
}

/// Iterator over `n_1, n_2, ...`.
#[derive(Debug, Clone)]
pub struct Thresholds<'a> {
    sequence: &'a SummableSequence,
    level: i64,
    previous: usize,
}

impl Iterator for Thresholds<'_> {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        self.level += 1;
        let bound = pow2(1 - self.level);
        let mut n = self.previous + 1;
        while self.sequence.tail_sum(n) >= bound {
            n += 1;
        }
        self.previous = n;
        Some(n)
    }
}

impl ScalerResult {
    pub fn sequence(&self) -> &SummableSequence {
        &self.sequence
    }

    pub fn thresholds(&self) -> Thresholds<'_> {
        Thresholds {
            sequence: &self.sequence,
            level: 0,
            previous: 0,
        }
    }

    /// `n_l` for `l ≥ 1`.
    pub fn threshold(&self, l: usize) -> usize {
        assert!(l >= 1, "levels start at 1");
        self.thresholds().nth(l - 1).expect("thresholds never end")
    }

    /// `y_n` for `n ≥ 1`.
    pub fn y(&self, n: usize) -> Rational {
        assert!(n >= 1, "sequences are indexed from 1");
        let level = self.thresholds().position(|t| t >= n).expect("thresholds never end");
        int(level.max(1) as i64)
    }

    /// `y_1, ..., y_n`.
    pub fn multipliers(&self, n: usize) -> Vec<Rational> {
        let mut out = Vec::with_capacity(n);
        let mut thresholds = self.thresholds().enumerate();
        let (mut level, mut current) = thresholds.next().expect("thresholds never end");
        for k in 1..=n {
            while current < k {
                (level, current) = thresholds.next().expect("thresholds never end");
            }
            out.push(int(level.max(1) as i64));
        }
        out
    }

    /// `Σ_{k ≤ n} |x_k|·y_k`, exact.
    pub fn weighted_partial_sum(&self, n: usize) -> Rational {
        self.multipliers(n)
            .iter()
            .enumerate()
            .map(|(i, y)| self.sequence.term(i + 1).abs() * y)
            .sum()
    }

    /// `Σ_{i ≥ l0} i·2^(1−i) = (l0 + 1)·2^(2−l0)` for `l0 ≥ 1`.
    pub fn weighted_tail_bound(l0: usize) -> Rational {
        let l0 = l0 as i64;
        int(l0 + 1) * pow2(2 - l0)
    }

    /// Upper bound on `Σ_k |x_k|·y_k`: the exact sum up to `n_L` plus
    /// `Σ_{i ≥ L} i·2^(1−i)`, which bounds everything beyond `n_L` because
    /// the mass on `(n_{l−1}, n_l]` is below `2^(2−l)` and carries `y = l − 1`.
    pub fn certified_series_bound(&self, level: usize) -> Rational {
        let n = self.threshold(level.max(1));
        self.weighted_partial_sum(n) + Self::weighted_tail_bound(level.max(1))
    }

    /// `Σ_{k=n_l}^{n} |x_k| < 2^(1−l)` for every `n` in `(n_l, up_to]`,
    /// checked by direct summation.
    pub fn tail_inequality_holds(&self, l: usize, up_to: usize) -> bool {
        let start = self.threshold(l);
        let bound = pow2(1 - l as i64);
        let mut acc = self.sequence.term(start).abs();
        for n in start + 1..=up_to {
            acc += self.sequence.term(n).abs();
            if acc >= bound {
                return false;
            }
        }
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    #[test]
    fn quarter_powers() {
        let x = SummableSequence::geometric(int(1), rat(1, 4)).unwrap();
        let s = summable_scaler(&x);
        let t: Vec<usize> = s.thresholds().take(20).collect();
        assert_eq!(t, (1..=20).collect::<Vec<_>>());
        assert_eq!(s.y(1), int(1));
        assert_eq!(s.y(2), int(1));
        assert_eq!(s.y(7), int(6));
        // Σ 4^-n y_n = 1/4 + Σ_{m ≥ 1} m·4^-(m+1) = 13/36
        let partial = s.weighted_partial_sum(50);
        assert!(partial < rat(13, 36));
        assert!(s.certified_series_bound(50) >= rat(13, 36));
        assert!(s.certified_series_bound(50) - rat(13, 36) < rat(1, 1_000_000_000_000));
        assert!((1..=20).all(|l| s.tail_inequality_holds(l, 60)));
    }

    #[test]
    fn single_spike() {
        let s = summable_scaler(&SummableSequence::finite(vec![int(1)]));
        assert_eq!(s.threshold(1), 2);
        assert_eq!(s.threshold(2), 3);
        assert_eq!(s.weighted_partial_sum(30), int(1));
    }

    #[test]
    fn three_ones() {
        let s = summable_scaler(&SummableSequence::finite(vec![int(1), int(1), int(1)]));
        assert_eq!(s.threshold(1), 4);
        assert_eq!(s.multipliers(5), vec![int(1), int(1), int(1), int(1), int(1)]);
        assert_eq!(s.y(6), int(2));
    }

    #[test]
    fn zero_sequence_has_consecutive_thresholds() {
        let s = summable_scaler(&SummableSequence::finite(Vec::new()));
        assert_eq!(s.thresholds().take(4).collect::<Vec<_>>(), vec![1, 2, 3, 4]);
        assert_eq!(s.weighted_partial_sum(10), int(0));
    }

    #[test]
    fn tail_sums() {
        let x = SummableSequence::new(vec![int(1), int(-2)], SequenceTail::Geometric {
            scale: int(1),
            ratio: rat(1, 2),
        })
        .unwrap();
        assert_eq!(x.term(2), int(-2));
        assert_eq!(x.term(3), rat(1, 8));
        assert_eq!(x.tail_sum(1), int(3) + rat(1, 4));
        assert_eq!(x.tail_sum(4), rat(1, 8));
        assert!(SummableSequence::geometric(int(1), int(1)).is_err());
    }

    #[test]
    fn weighted_tail_closed_form() {
        let direct: Rational = (3..200).map(|i| int(i) * pow2(1 - i)).sum();
        let closed = ScalerResult::weighted_tail_bound(3);
        assert!(direct < closed);
        assert!(closed - direct < pow2(-180));
    }
}
