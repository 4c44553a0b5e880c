//! Unnormalised discrete cosine and sine transforms computed with an FFT.
//!
//! For input `x_0..x_{N-1}` the outputs are
//!
//! | kind    | `X_k`                                                             |
//! |---------|-------------------------------------------------------------------|
//! | DCT-I   | `½[x_0 + (-1)^k x_{N-1}] + Σ_{n=1}^{N-2} x_n cos(πnk/(N-1))`       |
//! | DCT-II  | `Σ x_n cos(π(2n+1)k/(2N))`                                        |
//! | DCT-IV  | `Σ x_n cos(π(2n+1)(2k+1)/(4N))`                                   |
//! | DST-I   | `Σ x_n sin(π(n+1)(k+1)/(N+1))`                                    |
//! | DST-II  | `Σ x_n sin(π(2n+1)(k+1)/(2N))`                                    |
//! | DST-IV  | `Σ x_n sin(π(2n+1)(2k+1)/(4N))`                                   |
//!
//! DCT-I of a single sample is the sample itself. Every size is handled in
//! `O(N log N)` through the FFT planner.

use std::f64::consts::PI;
use std::sync::Arc;

use num_complex::Complex64;
use rustfft::{Fft, FftPlanner};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TrigKind {
    DctI,
    DctII,
    DctIV,
    DstI,
    DstII,
    DstIV,
}

/// A planned transform of fixed kind and size.
#[derive(Clone)]
pub struct TrigKernel {
    kind: TrigKind,
    size: usize,
    fft: Option<Arc<dyn Fft<f64>>>,
    twiddle: Vec<Complex64>,
}

impl std::fmt::Debug for TrigKernel {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("TrigKernel").field("kind", &self.kind).field("size", &self.size).finish()
    }
}

fn cis(phase: f64) -> Complex64 {
    Complex64::new(phase.cos(), phase.sin())
}

impl TrigKernel {
    pub fn new(kind: TrigKind, size: usize) -> Result<Self> {
        if size == 0 {
            return Err(Error::Size("transform length must be at least 1".into()));
        }
        let n = size;
        let fft_len = match kind {
            TrigKind::DctII | TrigKind::DstII => n,
            TrigKind::DctIV | TrigKind::DstIV => 2 * n,
            TrigKind::DctI if n == 1 => 0,
            TrigKind::DctI => 2 * (n - 1),
            TrigKind::DstI => 2 * (n + 1),
        };
        let fft = (fft_len > 0).then(|| FftPlanner::new().plan_fft_forward(fft_len));
        let nf = n as f64;
        let twiddle = match kind {
            TrigKind::DctII | TrigKind::DstII | TrigKind::DctIV | TrigKind::DstIV => {
                (0..n).map(|k| cis(-PI * k as f64 / (2.0 * nf))).collect()
            }
            TrigKind::DctI | TrigKind::DstI => Vec::new(),
        };
        Ok(Self { kind, size, fft, twiddle })
    }

    pub fn kind(&self) -> TrigKind {
        self.kind
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn apply(&self, data: &[f64]) -> Result<Vec<f64>> {
        if data.len() != self.size {
            return Err(Error::Size(format!(
                "transform planned for length {} applied to length {}",
                self.size,
                data.len()
            )));
        }
        Ok(match self.kind {
            TrigKind::DctII => self.dct2(data),
            TrigKind::DstII => {
                let alt: Vec<f64> = data.iter().enumerate().map(|(i, &v)| if i % 2 == 0 { v } else { -v }).collect();
                let mut out = self.dct2(&alt);
                out.reverse();
                out
            }
            TrigKind::DctIV | TrigKind::DstIV => self.type4(data),
            TrigKind::DctI => self.dct1(data),
            TrigKind::DstI => self.dst1(data),
        })
    }

    fn run(&self, buf: &mut [Complex64]) {
        if let Some(fft) = &self.fft {
            fft.process(buf);
        }
    }

    // Even samples forward, odd samples reversed, one length-N FFT.
    fn dct2(&self, x: &[f64]) -> Vec<f64> {
        let n = self.size;
        let mut buf = vec![Complex64::new(0.0, 0.0); n];
        for i in 0..n.div_ceil(2) {
            buf[i].re = x[2 * i];
        }
        for i in 0..n / 2 {
            buf[n - 1 - i].re = x[2 * i + 1];
        }
        self.run(&mut buf);
        buf.iter().zip(&self.twiddle).map(|(v, w)| (v * w).re).collect()
    }

    fn type4(&self, x: &[f64]) -> Vec<f64> {
        let n = self.size;
        let mut buf = vec![Complex64::new(0.0, 0.0); 2 * n];
        for i in 0..n {
            buf[i] = self.twiddle[i] * x[i];
        }
        self.run(&mut buf);
        let nf = n as f64;
        (0..n)
            .map(|k| {
                let v = buf[k] * cis(-PI * (2 * k + 1) as f64 / (4.0 * nf));
                if self.kind == TrigKind::DctIV {
                    v.re
                } else {
                    -v.im
                }
            })
            .collect()
    }

    fn dct1(&self, x: &[f64]) -> Vec<f64> {
        let n = self.size;
        if n == 1 {
            return vec![x[0]];
        }
        let mut buf: Vec<Complex64> = x.iter().map(|&v| Complex64::new(v, 0.0)).collect();
        buf.extend(x[1..n - 1].iter().rev().map(|&v| Complex64::new(v, 0.0)));
        self.run(&mut buf);
        buf[..n].iter().map(|v| 0.5 * v.re).collect()
    }

    fn dst1(&self, x: &[f64]) -> Vec<f64> {
        let n = self.size;
        let mut buf = vec![Complex64::new(0.0, 0.0); 2 * (n + 1)];
        for i in 0..n {
            buf[i + 1].re = x[i];
            buf[2 * n + 1 - i].re = -x[i];
        }
        self.run(&mut buf);
        buf[1..=n].iter().map(|v| -0.5 * v.im).collect()
    }
}

/// One-shot transform of `data`.
pub fn dct(kind: TrigKind, data: &[f64]) -> Result<Vec<f64>> {
    TrigKernel::new(kind, data.len())?.apply(data)
}

/// Direct `O(N²)` evaluation of the defining sums.
pub fn dct_naive(kind: TrigKind, data: &[f64]) -> Result<Vec<f64>> {
    let n = data.len();
    if n == 0 {
        return Err(Error::Size("transform length must be at least 1".into()));
    }
    let nf = n as f64;
    let out = (0..n)
        .map(|k| {
            let kf = k as f64;
            match kind {
                TrigKind::DctI => {
                    if n == 1 {
                        return data[0];
                    }
                    let sign = if k % 2 == 0 { 1.0 } else { -1.0 };
                    let ends = 0.5 * (data[0] + sign * data[n - 1]);
                    ends + (1..n - 1).map(|i| data[i] * (PI * i as f64 * kf / (nf - 1.0)).cos()).sum::<f64>()
                }
                TrigKind::DctII => {
                    data.iter().enumerate().map(|(i, &v)| v * (PI * (2 * i + 1) as f64 * kf / (2.0 * nf)).cos()).sum()
                }
                TrigKind::DctIV => data
                    .iter()
                    .enumerate()
                    .map(|(i, &v)| v * (PI * ((2 * i + 1) * (2 * k + 1)) as f64 / (4.0 * nf)).cos())
                    .sum(),
                TrigKind::DstI => data
                    .iter()
                    .enumerate()
                    .map(|(i, &v)| v * (PI * ((i + 1) * (k + 1)) as f64 / (nf + 1.0)).sin())
                    .sum(),
                TrigKind::DstII => data
                    .iter()
                    .enumerate()
                    .map(|(i, &v)| v * (PI * (2 * i + 1) as f64 * (kf + 1.0) / (2.0 * nf)).sin())
                    .sum(),
                TrigKind::DstIV => data
                    .iter()
                    .enumerate()
                    .map(|(i, &v)| v * (PI * ((2 * i + 1) * (2 * k + 1)) as f64 / (4.0 * nf)).sin())
                    .sum(),
            }
        })
        .collect();
    Ok(out)
}
