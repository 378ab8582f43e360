//! Discrete memoryless channels and optimal block decisions.
//!
//! A [`Dmc`] is a stochastic matrix W(b|a) over finite input/output
//! alphabets, both indexed from 0. [`Dist`] is a validated probability
//! vector. On top of these sit the MAP and ML decision rules, exact
//! block-error probability by full output enumeration, and seeded Monte
//! Carlo simulation of block-coding schemes.
//!
//! Conventions that golden tests depend on:
//! - every argmax tie is broken toward the smallest index;
//! - tuple indices (extended channels, enumeration order) treat the first
//!   symbol as the most significant digit;
//! - probabilities are f64; block likelihoods switch to log-domain
//!   accumulation for block lengths beyond 32 to dodge underflow.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

/// Row sums and distribution sums must hit 1 within this slack.
const PROB_TOL: f64 = 1e-12;
/// Output-enumeration cap for exact computations: |Y|^n entries.
const ENUM_CAP: u64 = 1 << 24;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum ChannelError {
    #[error("invalid probability {0}")]
    BadProbability(f64),
    #[error("probabilities sum to {0}, not 1")]
    BadSum(f64),
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("enumeration needs {needed} entries, cap is {cap}")]
    TooLarge { needed: u64, cap: u64 },
    #[error("block length {n} does not divide total length {total}")]
    NotDivisor { n: u64, total: u64 },
    #[error("invalid channel spec `{0}`")]
    BadSpec(String),
}

/// A probability distribution over {0, …, len−1}.
#[derive(Debug, Clone, PartialEq)]
pub struct Dist(Vec<f64>);

impl Dist {
    pub fn new(p: Vec<f64>) -> Result<Dist, ChannelError> {
        for &v in &p {
            if !(0.0..=1.0).contains(&v) || v.is_nan() {
                return Err(ChannelError::BadProbability(v));
            }
        }
        let s: f64 = p.iter().sum();
        if (s - 1.0).abs() > PROB_TOL {
            return Err(ChannelError::BadSum(s));
        }
        Ok(Dist(p))
    }

    pub fn uniform(n: usize) -> Dist {
        assert!(n > 0, "empty alphabet");
        Dist(vec![1.0 / n as f64; n])
    }

    pub fn point(n: usize, i: usize) -> Dist {
        assert!(i < n, "point mass outside alphabet");
        let mut p = vec![0.0; n];
        p[i] = 1.0;
        Dist(p)
    }

    pub fn probs(&self) -> &[f64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl std::ops::Index<usize> for Dist {
    type Output = f64;
    fn index(&self, i: usize) -> &f64 {
        &self.0[i]
    }
}

/// Entropy in bits, Σ p·log2(1/p) over the support.
pub fn entropy(d: &Dist) -> f64 {
    d.probs()
        .iter()
        .filter(|&&p| p > 0.0)
        .map(|&p| -p * p.log2())
        .sum()
}

/// Discrete memoryless channel: |X|×|Y| stochastic matrix, row-major.
#[derive(Debug, Clone, PartialEq)]
pub struct Dmc {
    nx: usize,
    ny: usize,
    w: Vec<f64>,
}

/// Output index of the erasure symbol in [`Dmc::bec`] channels.
pub const BEC_ERASURE: u64 = 2;

impl Dmc {
    pub fn new(rows: Vec<Vec<f64>>) -> Result<Dmc, ChannelError> {
        let nx = rows.len();
        assert!(nx > 0, "empty input alphabet");
        let ny = rows[0].len();
        assert!(ny > 0, "empty output alphabet");
        let mut w = Vec::with_capacity(nx * ny);
        for row in &rows {
            if row.len() != ny {
                return Err(ChannelError::ShapeMismatch("ragged rows".into()));
            }
            for &v in row {
                if !(0.0..=1.0).contains(&v) || v.is_nan() {
                    return Err(ChannelError::BadProbability(v));
                }
            }
            let s: f64 = row.iter().sum();
            if (s - 1.0).abs() > PROB_TOL {
                return Err(ChannelError::BadSum(s));
            }
            w.extend_from_slice(row);
        }
        Ok(Dmc { nx, ny, w })
    }

    /// Binary symmetric channel with crossover probability δ.
    pub fn bsc(delta: f64) -> Result<Dmc, ChannelError> {
        Dmc::new(vec![vec![1.0 - delta, delta], vec![delta, 1.0 - delta]])
    }

    /// Binary erasure channel; outputs are {0, 1, e} with the erasure as
    /// output index [`BEC_ERASURE`].
    pub fn bec(eps: f64) -> Result<Dmc, ChannelError> {
        Dmc::new(vec![
            vec![1.0 - eps, 0.0, eps],
            vec![0.0, 1.0 - eps, eps],
        ])
    }

    /// q-ary symmetric channel: correct with probability 1−(q−1)δ, each of
    /// the q−1 wrong symbols with probability δ.
    pub fn q_sym(q: u64, delta: f64) -> Result<Dmc, ChannelError> {
        let q = q as usize;
        assert!(q >= 2, "alphabet must have at least two symbols");
        let stay = 1.0 - (q as f64 - 1.0) * delta;
        if !(0.0..=1.0).contains(&stay) {
            return Err(ChannelError::BadProbability(stay));
        }
        let rows = (0..q)
            .map(|x| {
                (0..q)
                    .map(|y| if x == y { stay } else { delta })
                    .collect()
            })
            .collect();
        Dmc::new(rows)
    }

    /// Parse `bsc:0.11`, `bec:0.5`, or `qsym:5:0.05`.
    pub fn parse_spec(s: &str) -> Result<Dmc, ChannelError> {
        let bad = || ChannelError::BadSpec(s.to_string());
        let parts: Vec<&str> = s.split(':').collect();
        match parts.as_slice() {
            ["bsc", d] => Dmc::bsc(d.trim().parse().map_err(|_| bad())?),
            ["bec", e] => Dmc::bec(e.trim().parse().map_err(|_| bad())?),
            ["qsym", q, d] => Dmc::q_sym(
                q.trim().parse().map_err(|_| bad())?,
                d.trim().parse().map_err(|_| bad())?,
            ),
            _ => Err(bad()),
        }
    }

    pub fn nx(&self) -> usize {
        self.nx
    }
    pub fn ny(&self) -> usize {
        self.ny
    }

    /// W(y|x).
    #[inline]
    pub fn prob(&self, x: u64, y: u64) -> f64 {
        assert!((x as usize) < self.nx && (y as usize) < self.ny);
        self.w[x as usize * self.ny + y as usize]
    }

    pub fn row(&self, x: u64) -> &[f64] {
        assert!((x as usize) < self.nx);
        &self.w[x as usize * self.ny..(x as usize + 1) * self.ny]
    }

    /// Joint matrix P(x,y) = prior(x)·W(y|x), row-major |X|×|Y|.
    pub fn joint(&self, prior: &Dist) -> Result<Vec<Vec<f64>>, ChannelError> {
        if prior.len() != self.nx {
            return Err(ChannelError::ShapeMismatch(format!(
                "prior has {} entries, channel has {} inputs",
                prior.len(),
                self.nx
            )));
        }
        Ok((0..self.nx)
            .map(|x| {
                self.row(x as u64)
                    .iter()
                    .map(|&w| prior[x] * w)
                    .collect()
            })
            .collect())
    }

    /// MAP decision table: f(y) = argmax_x prior(x)·W(y|x), ties to the
    /// smallest input index.
    pub fn map_rule(&self, prior: &Dist) -> Result<Vec<usize>, ChannelError> {
        let joint = self.joint(prior)?;
        Ok((0..self.ny)
            .map(|y| {
                let mut best = f64::NEG_INFINITY;
                let mut arg = 0;
                for x in 0..self.nx {
                    if joint[x][y] > best {
                        best = joint[x][y];
                        arg = x;
                    }
                }
                arg
            })
            .collect())
    }

    /// ML decision table: MAP under the uniform prior.
    pub fn ml_rule(&self) -> Vec<usize> {
        self.map_rule(&Dist::uniform(self.nx))
            .expect("uniform prior always matches")
    }

    /// P[X = f(Y)] for a decision table f given the input prior.
    pub fn prob_correct(&self, prior: &Dist, rule: &[usize]) -> Result<f64, ChannelError> {
        if prior.len() != self.nx || rule.len() != self.ny {
            return Err(ChannelError::ShapeMismatch(
                "prior/rule lengths do not match the channel".into(),
            ));
        }
        Ok(rule
            .iter()
            .enumerate()
            .map(|(y, &x)| prior[x] * self.prob(x as u64, y as u64))
            .sum())
    }

    /// The n-use product channel on tuple alphabets. Tuples are indexed
    /// row-major with the first symbol most significant. Total entry count
    /// |X|^n·|Y|^n is capped at 2^24.
    pub fn extend(&self, n: u32) -> Result<Dmc, ChannelError> {
        assert!(n >= 1, "extension needs at least one use");
        let nxn = (self.nx as u64).checked_pow(n);
        let nyn = (self.ny as u64).checked_pow(n);
        let entries = nxn.zip(nyn).and_then(|(a, b)| a.checked_mul(b));
        let Some(entries) = entries.filter(|&e| e <= ENUM_CAP) else {
            return Err(ChannelError::TooLarge {
                needed: entries.unwrap_or(u64::MAX),
                cap: ENUM_CAP,
            });
        };
        let _ = entries;
        let (nxn, nyn) = (nxn.unwrap() as usize, nyn.unwrap() as usize);
        let mut rows = Vec::with_capacity(nxn);
        let mut xt = vec![0u64; n as usize];
        loop {
            let mut row = Vec::with_capacity(nyn);
            let mut yt = vec![0u64; n as usize];
            loop {
                let p: f64 = xt.iter().zip(&yt).map(|(&x, &y)| self.prob(x, y)).product();
                row.push(p);
                if !odometer(&mut yt, self.ny as u64) {
                    break;
                }
            }
            rows.push(row);
            if !odometer(&mut xt, self.nx as u64) {
                break;
            }
        }
        Dmc::new(rows)
    }

    /// Sample one output symbol for input x.
    fn sample(&self, x: u64, rng: &mut impl Rng) -> u64 {
        let u: f64 = rng.random();
        let mut acc = 0.0;
        for (y, &w) in self.row(x).iter().enumerate() {
            acc += w;
            if u < acc {
                return y as u64;
            }
        }
        self.ny as u64 - 1 // rounding slack lands on the last symbol
    }
}

/// Advance a tuple over [0, base)^len, first symbol most significant.
/// Returns false when the tuple wraps back to all zeros.
fn odometer(t: &mut [u64], base: u64) -> bool {
    for d in t.iter_mut().rev() {
        *d += 1;
        if *d < base {
            return true;
        }
        *d = 0;
    }
    false
}

/// Exact block-error probability of the MAP block decoder, split by
/// transmitted codeword: `by_codeword[i]` = P(error | codeword i sent).
#[derive(Debug, Clone, PartialEq)]
pub struct BlockErrorReport {
    pub total: f64,
    pub by_codeword: Vec<f64>,
}

/// Exact P_e of the MAP block decoder on the n-use product channel, by full
/// enumeration of all |Y|^n outputs (cap 2^24). Codewords are words over the
/// channel input alphabet; the decoder is argmax over codewords of
/// prior(i)·Π W(y_j|c_j), ties to the smallest codeword index.
pub fn exact_block_error(
    code: &[Vec<u64>],
    prior: &Dist,
    ch: &Dmc,
) -> Result<f64, ChannelError> {
    Ok(exact_block_error_detailed(code, prior, ch)?.total)
}

pub fn exact_block_error_detailed(
    code: &[Vec<u64>],
    prior: &Dist,
    ch: &Dmc,
) -> Result<BlockErrorReport, ChannelError> {
    assert!(!code.is_empty(), "empty codebook");
    let n = code[0].len();
    assert!(n >= 1, "empty codewords");
    for c in code {
        if c.len() != n {
            return Err(ChannelError::ShapeMismatch(
                "codewords have mixed lengths".into(),
            ));
        }
        assert!(
            c.iter().all(|&s| (s as usize) < ch.nx()),
            "codeword symbol outside the channel input alphabet"
        );
    }
    if prior.len() != code.len() {
        return Err(ChannelError::ShapeMismatch(format!(
            "prior has {} entries for {} codewords",
            prior.len(),
            code.len()
        )));
    }
    match (ch.ny as u64).checked_pow(n as u32) {
        Some(total) if total <= ENUM_CAP => {}
        other => {
            return Err(ChannelError::TooLarge {
                needed: other.unwrap_or(u64::MAX),
                cap: ENUM_CAP,
            })
        }
    }

    let log_domain = n > 32;
    let mut cond_correct = vec![0.0f64; code.len()];
    let mut y = vec![0u64; n];
    loop {
        if log_domain {
            // Likelihoods as Σ ln W; exponentiate only the winner's.
            let mut best = f64::NEG_INFINITY;
            let mut win = 0;
            let mut win_loglike = f64::NEG_INFINITY;
            for (i, c) in code.iter().enumerate() {
                let loglike: f64 = c
                    .iter()
                    .zip(&y)
                    .map(|(&cs, &ys)| ch.prob(cs, ys).ln())
                    .sum();
                let score = prior[i].ln() + loglike;
                if score > best {
                    best = score;
                    win = i;
                    win_loglike = loglike;
                }
            }
            cond_correct[win] += win_loglike.exp();
        } else {
            let mut best = f64::NEG_INFINITY;
            let mut win = 0;
            let mut win_like = 0.0;
            for (i, c) in code.iter().enumerate() {
                let like: f64 = c
                    .iter()
                    .zip(&y)
                    .map(|(&cs, &ys)| ch.prob(cs, ys))
                    .product();
                let score = prior[i] * like;
                if score > best {
                    best = score;
                    win = i;
                    win_like = like;
                }
            }
            cond_correct[win] += win_like;
        }
        if !odometer(&mut y, ch.ny as u64) {
            break;
        }
    }
    let by_codeword: Vec<f64> = cond_correct.iter().map(|&c| 1.0 - c).collect();
    let total = by_codeword
        .iter()
        .enumerate()
        .map(|(i, &pe)| prior[i] * pe)
        .sum();
    Ok(BlockErrorReport { total, by_codeword })
}

/// Probability that every block of a `total`-symbol transmission decodes
/// correctly when each length-n block fails independently with probability
/// p_e: (1−p_e)^(total/n). Errors unless n divides total.
pub fn pcb(p_e: f64, n: u64, total: u64) -> Result<f64, ChannelError> {
    if n == 0 || total % n != 0 {
        return Err(ChannelError::NotDivisor { n, total });
    }
    Ok((1.0 - p_e).powi((total / n) as i32))
}

/// A block-coding scheme as seen by the simulator: encode info words over
/// [0, alphabet) into channel-input words, decode channel-output words back.
pub trait BlockScheme {
    /// Symbols per info word.
    fn info_len(&self) -> usize;
    /// Symbols per codeword.
    fn block_len(&self) -> usize;
    /// Info symbols are sampled i.i.d. uniform over [0, alphabet).
    fn alphabet(&self) -> u64;
    fn encode(&self, u: &[u64]) -> Vec<u64>;
    /// Returns (codeword estimate, info estimate).
    fn decode(&self, y: &[u64]) -> (Vec<u64>, Vec<u64>);
}

/// A codebook with minimum-Hamming-distance decoding (ties to the smallest
/// codeword index). Info word = codebook index, so a uniform info word is a
/// uniform codeword. On a BSC with crossover below 1/2 this decoder is the
/// ML (= uniform-prior MAP) block decoder.
pub struct MinDistanceScheme {
    codebook: Vec<Vec<u64>>,
}

impl MinDistanceScheme {
    pub fn new(codebook: Vec<Vec<u64>>) -> MinDistanceScheme {
        assert!(!codebook.is_empty(), "empty codebook");
        let n = codebook[0].len();
        assert!(
            codebook.iter().all(|c| c.len() == n),
            "codewords have mixed lengths"
        );
        MinDistanceScheme { codebook }
    }
}

impl BlockScheme for MinDistanceScheme {
    fn info_len(&self) -> usize {
        1
    }
    fn block_len(&self) -> usize {
        self.codebook[0].len()
    }
    fn alphabet(&self) -> u64 {
        self.codebook.len() as u64
    }
    fn encode(&self, u: &[u64]) -> Vec<u64> {
        self.codebook[u[0] as usize].clone()
    }
    fn decode(&self, y: &[u64]) -> (Vec<u64>, Vec<u64>) {
        let mut best = usize::MAX;
        let mut arg = 0;
        for (i, c) in self.codebook.iter().enumerate() {
            let d = c.iter().zip(y).filter(|(a, b)| a != b).count();
            if d < best {
                best = d;
                arg = i;
            }
        }
        (self.codebook[arg].clone(), vec![arg as u64])
    }
}

/// Outcome of a Monte Carlo run.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonteCarloReport {
    pub trials: u64,
    pub codeword_errors: u64,
    pub infoword_errors: u64,
}

impl MonteCarloReport {
    pub fn codeword_rate(&self) -> f64 {
        self.codeword_errors as f64 / self.trials as f64
    }
    pub fn infoword_rate(&self) -> f64 {
        self.infoword_errors as f64 / self.trials as f64
    }
}

/// Monte Carlo estimate of block and info error rates: sample a uniform
/// info word, encode, push the codeword through the channel symbol by
/// symbol, decode, count mismatches.
///
/// Worker w runs its share of trials on an independent stream seeded with
/// `seed.wrapping_add(w)`. Exact counts are reproducible for a fixed worker
/// count; across worker counts only the statistics agree. Single worker is
/// the configuration golden tests rely on.
pub fn simulate<S: BlockScheme + Sync>(
    scheme: &S,
    ch: &Dmc,
    trials: u64,
    seed: u64,
    workers: usize,
) -> MonteCarloReport {
    assert!(trials >= 1, "need at least one trial");
    assert!(workers >= 1, "need at least one worker");
    let workers = workers.min(trials as usize);

    let run = |worker: usize, share: u64| -> (u64, u64) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_add(worker as u64));
        let q = scheme.alphabet();
        let (mut cw_err, mut info_err) = (0u64, 0u64);
        for _ in 0..share {
            let u: Vec<u64> = (0..scheme.info_len())
                .map(|_| rng.random_range(0..q))
                .collect();
            let c = scheme.encode(&u);
            debug_assert_eq!(c.len(), scheme.block_len());
            let y: Vec<u64> = c.iter().map(|&s| ch.sample(s, &mut rng)).collect();
            let (c_hat, u_hat) = scheme.decode(&y);
            if c_hat != c {
                cw_err += 1;
            }
            if u_hat != u {
                info_err += 1;
            }
        }
        (cw_err, info_err)
    };

    let (cw, info) = if workers == 1 {
        run(0, trials)
    } else {
        let base = trials / workers as u64;
        let extra = (trials % workers as u64) as usize;
        std::thread::scope(|s| {
            let handles: Vec<_> = (0..workers)
                .map(|w| {
                    let share = base + u64::from(w < extra);
                    s.spawn(move || run(w, share))
                })
                .collect();
            handles
                .into_iter()
                .map(|h| h.join().expect("simulation worker panicked"))
                .fold((0, 0), |(a, b), (c, i)| (a + c, b + i))
        })
    };
    MonteCarloReport {
        trials,
        codeword_errors: cw,
        infoword_errors: info,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bsc_joint_map_ml() {
        let ch = Dmc::bsc(0.2).unwrap();
        let prior = Dist::new(vec![0.1, 0.9]).unwrap();
        let j = ch.joint(&prior).unwrap();
        assert!((j[0][0] - 0.08).abs() < 1e-12);
        assert!((j[0][1] - 0.02).abs() < 1e-12);
        assert!((j[1][0] - 0.18).abs() < 1e-12);
        assert!((j[1][1] - 0.72).abs() < 1e-12);
        assert_eq!(ch.map_rule(&prior).unwrap(), vec![1, 1]);
        assert_eq!(ch.ml_rule(), vec![0, 1]);
        // P_c of the MAP rule: 0.18 + 0.72.
        let pc = ch.prob_correct(&prior, &[1, 1]).unwrap();
        assert!((pc - 0.9).abs() < 1e-12);
    }

    #[test]
    fn uniform_prior_map_equals_ml() {
        let ch = Dmc::new(vec![vec![0.5, 0.3, 0.2], vec![0.1, 0.6, 0.3]]).unwrap();
        assert_eq!(ch.map_rule(&Dist::uniform(2)).unwrap(), ch.ml_rule());
    }

    #[test]
    fn point_prior_never_errs() {
        let ch = Dmc::bsc(0.2).unwrap();
        let prior = Dist::point(2, 0);
        let rule = ch.map_rule(&prior).unwrap();
        assert_eq!(rule, vec![0, 0]);
        assert!((ch.prob_correct(&prior, &rule).unwrap() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn half_bsc_ties_go_low() {
        let ch = Dmc::bsc(0.5).unwrap();
        assert_eq!(ch.ml_rule(), vec![0, 0]);
    }

    #[test]
    fn bec_shape_and_qsym() {
        let ch = Dmc::bec(0.1).unwrap();
        assert_eq!((ch.nx(), ch.ny()), (2, 3));
        assert_eq!(ch.prob(0, BEC_ERASURE), 0.1);
        assert_eq!(ch.prob(0, 1), 0.0);
        // Erasure output mass is epsilon for any prior.
        let j = ch.joint(&Dist::new(vec![0.3, 0.7]).unwrap()).unwrap();
        assert!((j[0][2] + j[1][2] - 0.1).abs() < 1e-12);

        assert_eq!(Dmc::q_sym(2, 0.2).unwrap(), Dmc::bsc(0.2).unwrap());
        assert!(Dmc::q_sym(5, 0.3).is_err()); // (q-1)δ > 1
    }

    #[test]
    fn validation_rejects_bad_rows() {
        assert!(matches!(
            Dmc::new(vec![vec![0.5, 0.4], vec![0.5, 0.5]]),
            Err(ChannelError::BadSum(_))
        ));
        assert!(matches!(
            Dmc::new(vec![vec![1.5, -0.5]]),
            Err(ChannelError::BadProbability(_))
        ));
        assert!(Dist::new(vec![0.5, 0.6]).is_err());
    }

    #[test]
    fn entropy_values() {
        assert!((entropy(&Dist::uniform(2)) - 1.0).abs() < 1e-12);
        assert_eq!(entropy(&Dist::point(4, 2)), 0.0);
        let h = entropy(&Dist::new(vec![0.2, 0.8]).unwrap());
        assert!((h - 0.7219280948873623).abs() < 1e-12);
        // 0 <= H <= log2 |X|
        let d = Dist::new(vec![0.1, 0.2, 0.3, 0.4]).unwrap();
        assert!(entropy(&d) >= 0.0 && entropy(&d) <= 2.0);
    }

    #[test]
    fn extend_product_structure() {
        let ch = Dmc::bsc(0.3).unwrap();
        assert_eq!(ch.extend(1).unwrap(), ch);
        let ch2 = ch.extend(2).unwrap();
        assert_eq!((ch2.nx(), ch2.ny()), (4, 4));
        // First symbol most significant: input 01 has index 1, output 00 index 0.
        assert!((ch2.prob(1, 0) - 0.3 * 0.7).abs() < 1e-12);
        for x in 0..4 {
            let s: f64 = ch2.row(x).iter().sum();
            assert!((s - 1.0).abs() < 1e-12);
        }
        assert!(matches!(
            ch.extend(30),
            Err(ChannelError::TooLarge { .. })
        ));
    }

    #[test]
    fn exact_single_use_is_delta() {
        let ch = Dmc::bsc(0.2).unwrap();
        let pe = exact_block_error(&[vec![0], vec![1]], &Dist::uniform(2), &ch).unwrap();
        assert!((pe - 0.2).abs() < 1e-12);
    }

    #[test]
    fn exact_repetition_benchmark() {
        let ch = Dmc::bsc(0.11).unwrap();
        let code = vec![vec![0; 5], vec![1; 5]];
        let pe = exact_block_error(&code, &Dist::uniform(2), &ch).unwrap();
        // Closed form: P(>=3 of 5 flips) with δ=0.11.
        assert!((pe - 0.0112104806).abs() < 1e-10);
    }

    #[test]
    fn exact_bec_three_codewords() {
        // Erasures never contradict the sent word, so the smallest-index
        // codeword wins every tie: conditional error rates 0, ε², 2ε²−ε³.
        let ch = Dmc::bec(0.5).unwrap();
        let code = vec![vec![1, 1, 0], vec![0, 1, 1], vec![1, 0, 1]];
        let rep = exact_block_error_detailed(&code, &Dist::uniform(3), &ch).unwrap();
        assert!((rep.by_codeword[0] - 0.0).abs() < 1e-12);
        assert!((rep.by_codeword[1] - 0.25).abs() < 1e-12);
        assert!((rep.by_codeword[2] - 0.375).abs() < 1e-12);
        assert!((rep.total - 0.625 / 3.0).abs() < 1e-12);
    }

    #[test]
    fn pcb_values() {
        assert!((pcb(0.0, 5, 840).unwrap() - 1.0).abs() < 1e-12);
        assert!((pcb(0.3, 840, 840).unwrap() - 0.7).abs() < 1e-12);
        let p = pcb(0.0112, 5, 840).unwrap();
        assert!((p - 0.9888f64.powi(168)).abs() < 1e-12);
        assert!(matches!(
            pcb(0.1, 9, 840),
            Err(ChannelError::NotDivisor { .. })
        ));
    }

    #[test]
    fn simulate_noiseless_and_saturated() {
        let rep5 = MinDistanceScheme::new(vec![vec![0; 5], vec![1; 5]]);
        let clean = Dmc::bsc(0.0).unwrap();
        let r = simulate(&rep5, &clean, 1000, 7, 1);
        assert_eq!(r.codeword_errors, 0);
        assert_eq!(r.infoword_errors, 0);
        // δ=1 flips every bit; min-distance decoding lands on the complement.
        let flip = Dmc::bsc(1.0).unwrap();
        let r = simulate(&rep5, &flip, 1000, 7, 1);
        assert_eq!(r.codeword_errors, 1000);
    }

    #[test]
    fn simulate_reproducible_and_partitioned() {
        let rep5 = MinDistanceScheme::new(vec![vec![0; 5], vec![1; 5]]);
        let ch = Dmc::bsc(0.11).unwrap();
        let a = simulate(&rep5, &ch, 20_000, 42, 1);
        let b = simulate(&rep5, &ch, 20_000, 42, 1);
        assert_eq!(a, b);
        let c = simulate(&rep5, &ch, 20_000, 42, 3);
        assert_eq!(c.trials, 20_000);
        // Different partitions, same statistics (loose 5-sigma gate).
        let sigma = (0.01121 * (1.0 - 0.01121) / 20_000.0f64).sqrt();
        assert!((c.codeword_rate() - 0.01121).abs() < 5.0 * sigma);
    }

    #[test]
    fn channel_spec_strings() {
        assert_eq!(Dmc::parse_spec("bsc:0.11").unwrap(), Dmc::bsc(0.11).unwrap());
        assert_eq!(Dmc::parse_spec("bec:0.5").unwrap(), Dmc::bec(0.5).unwrap());
        assert_eq!(
            Dmc::parse_spec("qsym:5:0.05").unwrap(),
            Dmc::q_sym(5, 0.05).unwrap()
        );
        assert!(Dmc::parse_spec("awgn:1").is_err());
        assert!(Dmc::parse_spec("bsc:2").is_err());
    }
}
