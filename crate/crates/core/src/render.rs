//! Rasterize attractors and count pixel components.
//!
//! Points are the depth-`n` truncations `Σ_{i<=n} d_i (α_i, β_i)` over all
//! digit strings, drawn in the basis `v = (1,0)`, `Av = (0,1)`; each point
//! marks the one pixel it falls in. The window is analytic (from the exact
//! series sums), so it never depends on the sampled points, and each axis
//! is scaled independently so the attractor fills the square image — the
//! aspect the published panels use. The automatic depth is the first at
//! which the extent of a depth-`n` cell — the set of all refinements of
//! one truncation — drops below a pixel on both axes. Component counts
//! are an empirical indicator, not a proof; depth and the cell/pixel
//! ratio are reported so resolution can be judged.

use crate::algebra::Quadratic;
use crate::criteria::{classify_consecutive, classify_nonconsecutive, CollinearDigitSet, Verdict};
use crate::series::{signed_series_sums, tilde_sums, AlphaBetaSequence, SeriesError};
use num::{BigInt, BigRational, Signed, ToPrimitive};
#[cfg(feature = "parallel")]
use rayon::prelude::*;
use std::path::Path;
use thiserror::Error;

/// Hard cap on generated points: `|D|^depth` may not exceed this.
pub const POINT_CAP: u64 = 20_000_000;

#[derive(Debug, Error)]
pub enum RenderError {
    #[error("polynomial {0} is not expanding")]
    NotExpanding(Quadratic),
    #[error("image size must be positive")]
    ZeroSize,
    #[error("depth must be at least 1")]
    ZeroDepth,
    #[error("{digits} digits at depth {depth} exceed the point cap of {cap}")]
    PointCapExceeded {
        digits: usize,
        depth: usize,
        cap: u64,
    },
    #[error("failed writing {path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    #[error(transparent)]
    Series(#[from] SeriesError),
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct RasterConfig {
    /// Pixels per side of the square image.
    pub size: usize,
    /// Digit-string length; `None` picks the smallest depth whose cell
    /// bound drops below one pixel, within the point cap.
    pub depth: Option<usize>,
    /// Fractional padding around the analytic extent.
    pub margin: f64,
}

impl Default for RasterConfig {
    fn default() -> Self {
        RasterConfig {
            size: 512,
            depth: None,
            margin: 0.05,
        }
    }
}

/// Binary pixel grid, row-major, row 0 at the top.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bitmap {
    width: usize,
    height: usize,
    bits: Vec<bool>,
}

impl Bitmap {
    pub fn new(width: usize, height: usize) -> Self {
        Bitmap {
            width,
            height,
            bits: vec![false; width * height],
        }
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn height(&self) -> usize {
        self.height
    }

    pub fn get(&self, x: usize, y: usize) -> bool {
        self.bits[y * self.width + x]
    }

    pub fn set(&mut self, x: usize, y: usize, value: bool) {
        self.bits[y * self.width + x] = value;
    }

    pub fn foreground_count(&self) -> usize {
        self.bits.iter().filter(|&&b| b).count()
    }
}

/// The rectangle of the plane the image shows; each axis maps onto the
/// full image side independently.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Bounds {
    pub x_min: f64,
    pub y_min: f64,
    pub width: f64,
    pub height: f64,
}

#[derive(Clone, Debug)]
pub struct RasterResult {
    pub bitmap: Bitmap,
    /// Number of 8-connected foreground components.
    pub component_count: usize,
    pub bounds: Bounds,
    /// Digit-string length actually rendered.
    pub depth: usize,
    /// Extent bound of one depth-`depth` cell, in pixels (worst axis).
    pub cell_px: f64,
}

/// Everything the point generator needs, fixed before any pixel is drawn.
struct Frame {
    digits: Vec<i64>,
    depth: usize,
    alphas: Vec<f64>,
    betas: Vec<f64>,
    size: usize,
    x0: f64,
    y0: f64,
    inv_pixel_x: f64,
    inv_pixel_y: f64,
    bounds: Bounds,
    cell_px: f64,
}

fn half(x: BigRational) -> BigRational {
    x / BigRational::from_integer(BigInt::from(2))
}

fn prepare(
    quad: Quadratic,
    dset: &CollinearDigitSet,
    cfg: &RasterConfig,
) -> Result<Frame, RenderError> {
    if !quad.is_expanding() {
        return Err(RenderError::NotExpanding(quad));
    }
    if cfg.size == 0 {
        return Err(RenderError::ZeroSize);
    }
    let digits = dset.digits().to_vec();
    let dmax = BigRational::from_integer(BigInt::from(dset.max_digit()));
    let sums = tilde_sums(quad)?;
    let (sum_a, sum_b) = signed_series_sums(quad)?;

    // Attractor extent: digits lie in [0, dmax], so each axis spans
    // [-dmax·Σ(negative part), dmax·Σ(positive part)].
    let x_hi = half(&dmax * (&sums.alpha_tilde + &sum_a)).to_f64().unwrap();
    let x_lo = -half(&dmax * (&sums.alpha_tilde - &sum_a)).to_f64().unwrap();
    let y_hi = half(&dmax * (&sums.beta_tilde + &sum_b)).to_f64().unwrap();
    let y_lo = -half(&dmax * (&sums.beta_tilde - &sum_b)).to_f64().unwrap();
    let pad = |lo: f64, hi: f64| -> (f64, f64) {
        let extent = hi - lo;
        let span = if extent > 0.0 {
            extent * (1.0 + 2.0 * cfg.margin)
        } else {
            1.0
        };
        ((lo + hi - span) / 2.0, span)
    };
    let (x_min, width) = pad(x_lo, x_hi);
    let (y_min, height) = pad(y_lo, y_hi);
    let bounds = Bounds {
        x_min,
        y_min,
        width,
        height,
    };
    let pixel_x = width / cfg.size as f64;
    let pixel_y = height / cfg.size as f64;

    // Largest depth the point cap allows.
    let nd = digits.len() as u128;
    let cap_depth = if nd <= 1 {
        64
    } else {
        let mut acc: u128 = 1;
        let mut n = 0usize;
        while acc * nd <= POINT_CAP as u128 {
            acc *= nd;
            n += 1;
        }
        if n == 0 {
            return Err(RenderError::PointCapExceeded {
                digits: digits.len(),
                depth: 1,
                cap: POINT_CAP,
            });
        }
        n
    };

    let mut seq = AlphaBetaSequence::new(quad)?;
    let zero = BigRational::from_integer(BigInt::from(0));
    let (mut abs_a, mut abs_b) = (zero.clone(), zero.clone());
    let mut extend = |i: usize, abs_a: &mut BigRational, abs_b: &mut BigRational| {
        let (a, b) = seq.get(i);
        *abs_a += a.abs();
        *abs_b += b.abs();
    };
    // Extent bound of one depth-`n` cell in pixels: the tail `Σ_{i>n}` of
    // each coordinate series, scaled by the largest digit, over the pixel
    // pitch of that axis.
    let cell_px_at = |abs_a: &BigRational, abs_b: &BigRational| -> f64 {
        let ta = (&dmax * (&sums.alpha_tilde - abs_a)).to_f64().unwrap() / pixel_x;
        let tb = (&dmax * (&sums.beta_tilde - abs_b)).to_f64().unwrap() / pixel_y;
        ta.max(tb)
    };

    let depth = match cfg.depth {
        Some(0) => return Err(RenderError::ZeroDepth),
        Some(d) => {
            if d > cap_depth {
                return Err(RenderError::PointCapExceeded {
                    digits: digits.len(),
                    depth: d,
                    cap: POINT_CAP,
                });
            }
            for i in 1..=d {
                extend(i, &mut abs_a, &mut abs_b);
            }
            d
        }
        None => {
            let mut n = 1;
            extend(1, &mut abs_a, &mut abs_b);
            while n < cap_depth && cell_px_at(&abs_a, &abs_b) >= 1.0 {
                n += 1;
                extend(n, &mut abs_a, &mut abs_b);
            }
            n
        }
    };
    let cell_px = cell_px_at(&abs_a, &abs_b);

    let mut alphas = Vec::with_capacity(depth);
    let mut betas = Vec::with_capacity(depth);
    for i in 1..=depth {
        let (a, b) = seq.get(i);
        alphas.push(a.to_f64().unwrap());
        betas.push(b.to_f64().unwrap());
    }

    Ok(Frame {
        digits,
        depth,
        alphas,
        betas,
        size: cfg.size,
        x0: bounds.x_min,
        y0: bounds.y_min,
        inv_pixel_x: 1.0 / pixel_x,
        inv_pixel_y: 1.0 / pixel_y,
        bounds,
        cell_px,
    })
}

impl Frame {
    fn col(&self, x: f64) -> i64 {
        ((x - self.x0) * self.inv_pixel_x).floor() as i64
    }

    /// Row 0 is the top of the image, so rows run against y.
    fn row(&self, y: f64) -> i64 {
        self.size as i64 - 1 - ((y - self.y0) * self.inv_pixel_y).floor() as i64
    }

    /// Mark the pixel containing the point `(x, y)`.
    fn plot(&self, x: f64, y: f64, bits: &mut [bool]) {
        let last = self.size as i64 - 1;
        let c = self.col(x).clamp(0, last);
        let r = self.row(y).clamp(0, last);
        bits[r as usize * self.size + c as usize] = true;
    }

    fn dfs(&self, level: usize, x: f64, y: f64, bits: &mut [bool]) {
        if level > self.depth {
            self.plot(x, y, bits);
            return;
        }
        let (a, b) = (self.alphas[level - 1], self.betas[level - 1]);
        for &d in &self.digits {
            self.dfs(level + 1, x + d as f64 * a, y + d as f64 * b, bits);
        }
    }

    fn finish(self, bits: Vec<bool>) -> RasterResult {
        let bitmap = Bitmap {
            width: self.size,
            height: self.size,
            bits,
        };
        let (component_count, _) = label_components(&bitmap);
        RasterResult {
            bitmap,
            component_count,
            bounds: self.bounds,
            depth: self.depth,
            cell_px: self.cell_px,
        }
    }
}

/// Single-threaded rasterizer; the parallel one must match it bit for bit.
pub fn rasterize_seq(
    quad: Quadratic,
    dset: &CollinearDigitSet,
    cfg: &RasterConfig,
) -> Result<RasterResult, RenderError> {
    let frame = prepare(quad, dset, cfg)?;
    let mut bits = vec![false; frame.size * frame.size];
    frame.dfs(1, 0.0, 0.0, &mut bits);
    Ok(frame.finish(bits))
}

/// Rasterize, partitioning work by the first digit when the `parallel`
/// feature is enabled. The partitions are merged by pixel-OR, so the
/// result is identical to [`rasterize_seq`].
#[cfg(feature = "parallel")]
pub fn rasterize(
    quad: Quadratic,
    dset: &CollinearDigitSet,
    cfg: &RasterConfig,
) -> Result<RasterResult, RenderError> {
    let frame = prepare(quad, dset, cfg)?;
    let n = frame.size * frame.size;
    let bits = frame
        .digits
        .par_iter()
        .map(|&d| {
            let mut local = vec![false; n];
            frame.dfs(
                2,
                d as f64 * frame.alphas[0],
                d as f64 * frame.betas[0],
                &mut local,
            );
            local
        })
        .reduce(
            || vec![false; n],
            |mut acc, part| {
                for (a, p) in acc.iter_mut().zip(&part) {
                    *a |= p;
                }
                acc
            },
        );
    Ok(frame.finish(bits))
}

#[cfg(not(feature = "parallel"))]
pub fn rasterize(
    quad: Quadratic,
    dset: &CollinearDigitSet,
    cfg: &RasterConfig,
) -> Result<RasterResult, RenderError> {
    rasterize_seq(quad, dset, cfg)
}

/// 8-connected labeling; label 0 is background, components are 1-based.
fn label_components(bitmap: &Bitmap) -> (usize, Vec<u32>) {
    let (w, h) = (bitmap.width, bitmap.height);
    let mut labels = vec![0u32; w * h];
    let mut stack = Vec::new();
    let mut count = 0u32;
    for start in 0..w * h {
        if !bitmap.bits[start] || labels[start] != 0 {
            continue;
        }
        count += 1;
        labels[start] = count;
        stack.push(start);
        while let Some(idx) = stack.pop() {
            let (x, y) = (idx % w, idx / w);
            for dy in -1i64..=1 {
                for dx in -1i64..=1 {
                    if dx == 0 && dy == 0 {
                        continue;
                    }
                    let (nx, ny) = (x as i64 + dx, y as i64 + dy);
                    if nx < 0 || ny < 0 || nx >= w as i64 || ny >= h as i64 {
                        continue;
                    }
                    let nidx = ny as usize * w + nx as usize;
                    if bitmap.bits[nidx] && labels[nidx] == 0 {
                        labels[nidx] = count;
                        stack.push(nidx);
                    }
                }
            }
        }
    }
    (count as usize, labels)
}

/// Binary portable graymap: foreground black (0) on white (255).
pub fn encode_p5(bitmap: &Bitmap) -> Vec<u8> {
    let mut out = format!("P5\n{} {}\n255\n", bitmap.width, bitmap.height).into_bytes();
    out.extend(bitmap.bits.iter().map(|&b| if b { 0u8 } else { 255u8 }));
    out
}

const PALETTE: [[u8; 3]; 12] = [
    [31, 119, 180],
    [255, 127, 14],
    [44, 160, 44],
    [214, 39, 40],
    [148, 103, 189],
    [140, 86, 75],
    [227, 119, 194],
    [127, 127, 127],
    [188, 189, 34],
    [23, 190, 207],
    [99, 61, 189],
    [255, 187, 120],
];

/// Portable pixmap with one palette color per component, white background.
pub fn encode_p6(bitmap: &Bitmap) -> Vec<u8> {
    let (_, labels) = label_components(bitmap);
    let mut out = format!("P6\n{} {}\n255\n", bitmap.width, bitmap.height).into_bytes();
    for &l in &labels {
        if l == 0 {
            out.extend([255u8, 255, 255]);
        } else {
            out.extend(PALETTE[(l as usize - 1) % PALETTE.len()]);
        }
    }
    out
}

fn write_bytes(path: &Path, bytes: &[u8]) -> Result<(), RenderError> {
    std::fs::write(path, bytes).map_err(|source| RenderError::Io {
        path: path.display().to_string(),
        source,
    })
}

pub fn write_image(result: &RasterResult, path: impl AsRef<Path>) -> Result<(), RenderError> {
    write_bytes(path.as_ref(), &encode_p5(&result.bitmap))
}

pub fn write_image_color(result: &RasterResult, path: impl AsRef<Path>) -> Result<(), RenderError> {
    write_bytes(path.as_ref(), &encode_p6(&result.bitmap))
}

/// How one published panel is parameterized.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PanelSpec {
    Consecutive { b: i64, c: i64, m: i64 },
    Gap { p: i64, q: i64, s: i64 },
}

#[derive(Clone, Copy, Debug)]
pub struct FigurePanel {
    pub name: &'static str,
    pub spec: PanelSpec,
    /// Whether the attractor is connected (the published caption).
    pub connected: bool,
}

impl FigurePanel {
    pub fn quadratic(&self) -> Quadratic {
        match self.spec {
            PanelSpec::Consecutive { b, c, .. } => Quadratic::new(b, c),
            PanelSpec::Gap { p, q, .. } => Quadratic::new(-(p + q), p * q),
        }
    }

    pub fn digit_set(&self) -> CollinearDigitSet {
        match self.spec {
            PanelSpec::Consecutive { m, .. } => {
                CollinearDigitSet::consecutive(m).expect("table entries are valid")
            }
            PanelSpec::Gap { p, q, s } => {
                CollinearDigitSet::gap(p, q, s).expect("table entries are valid")
            }
        }
    }

    pub fn verdict(&self) -> Verdict {
        match self.spec {
            PanelSpec::Consecutive { b, c, m } => {
                classify_consecutive(Quadratic::new(b, c), m).expect("table entries are valid")
            }
            PanelSpec::Gap { p, q, s } => {
                classify_nonconsecutive(p, q, s).expect("table entries are valid")
            }
        }
    }
}

/// The 18 published panels.
pub const FIGURE_PANELS: [FigurePanel; 18] = [
    FigurePanel {
        name: "fig1a",
        spec: PanelSpec::Consecutive { b: -4, c: 4, m: 1 },
        connected: false,
    },
    FigurePanel {
        name: "fig1b",
        spec: PanelSpec::Consecutive { b: -4, c: 4, m: 2 },
        connected: true,
    },
    FigurePanel {
        name: "fig2a",
        spec: PanelSpec::Consecutive {
            b: -10,
            c: 24,
            m: 13,
        },
        connected: false,
    },
    FigurePanel {
        name: "fig2b",
        spec: PanelSpec::Consecutive {
            b: -10,
            c: 24,
            m: 15,
        },
        connected: true,
    },
    FigurePanel {
        name: "fig3a",
        spec: PanelSpec::Consecutive {
            b: -2,
            c: -24,
            m: 19,
        },
        connected: false,
    },
    FigurePanel {
        name: "fig3b",
        spec: PanelSpec::Consecutive {
            b: -2,
            c: -24,
            m: 21,
        },
        connected: true,
    },
    FigurePanel {
        name: "fig4a",
        spec: PanelSpec::Gap { p: 6, q: 4, s: 0 },
        connected: true,
    },
    FigurePanel {
        name: "fig4b",
        spec: PanelSpec::Gap { p: 6, q: 4, s: 1 },
        connected: false,
    },
    FigurePanel {
        name: "fig5a",
        spec: PanelSpec::Gap { p: 2, q: 2, s: 1 },
        connected: true,
    },
    FigurePanel {
        name: "fig5b",
        spec: PanelSpec::Gap { p: 2, q: 2, s: 2 },
        connected: false,
    },
    FigurePanel {
        name: "fig6a",
        spec: PanelSpec::Gap { p: 3, q: 4, s: 1 },
        connected: true,
    },
    FigurePanel {
        name: "fig6b",
        spec: PanelSpec::Gap { p: 3, q: 4, s: 2 },
        connected: false,
    },
    FigurePanel {
        name: "fig7a",
        spec: PanelSpec::Consecutive { b: 6, c: 12, m: 6 },
        connected: false,
    },
    FigurePanel {
        name: "fig7b",
        spec: PanelSpec::Consecutive { b: 6, c: 12, m: 7 },
        connected: true,
    },
    FigurePanel {
        name: "fig8a",
        spec: PanelSpec::Consecutive { b: 4, c: 8, m: 4 },
        connected: false,
    },
    FigurePanel {
        name: "fig8b",
        spec: PanelSpec::Consecutive { b: 4, c: 8, m: 5 },
        connected: true,
    },
    FigurePanel {
        name: "fig9a",
        spec: PanelSpec::Consecutive { b: 3, c: 9, m: 6 },
        connected: false,
    },
    FigurePanel {
        name: "fig9b",
        spec: PanelSpec::Consecutive { b: 3, c: 9, m: 7 },
        connected: true,
    },
];
