use crate::error::{Error, Result};
use crate::instance::OutcomeVector;

/// Position of a non-dominated point relative to the lower-left convex hull.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SupportLabel {
    /// A vertex of the hull.
    Extreme,
    /// On a hull edge but not a vertex.
    Supported,
    /// Strictly inside the hull.
    Unsupported,
}

impl SupportLabel {
    pub fn is_supported(self) -> bool {
        self != SupportLabel::Unsupported
    }

    pub fn as_str(self) -> &'static str {
        match self {
            SupportLabel::Extreme => "extreme",
            SupportLabel::Supported => "supported",
            SupportLabel::Unsupported => "unsupported",
        }
    }
}

/// `(a - o) x (p - o)`; positive when `p` lies left of the ray `o -> a`.
fn cross(o: OutcomeVector, a: OutcomeVector, p: OutcomeVector) -> i128 {
    let (ox, oy) = (o.c as i128, o.b as i128);
    (a.c as i128 - ox) * (p.b as i128 - oy) - (a.b as i128 - oy) * (p.c as i128 - ox)
}

/// Labels the points of a minimization front. `points` must be ordered by
/// `c` strictly increasing with `b` strictly decreasing.
///
/// All arithmetic is exact.
pub fn classify_supported(points: &[OutcomeVector]) -> Result<Vec<SupportLabel>> {
    if points.windows(2).any(|w| w[0].c >= w[1].c || w[0].b <= w[1].b) {
        return Err(Error::InvalidParameters(
            "front must be sorted by c increasing with b decreasing".into(),
        ));
    }
    // lower hull by monotone chain; collinear points are dropped
    let mut hull: Vec<usize> = Vec::new();
    for (i, &p) in points.iter().enumerate() {
        while hull.len() >= 2 && cross(points[hull[hull.len() - 2]], points[hull[hull.len() - 1]], p) <= 0 {
            hull.pop();
        }
        hull.push(i);
    }
    let mut labels = vec![SupportLabel::Unsupported; points.len()];
    for &h in &hull {
        labels[h] = SupportLabel::Extreme;
    }
    for edge in hull.windows(2) {
        let (a, z) = (points[edge[0]], points[edge[1]]);
        for i in edge[0] + 1..edge[1] {
            if cross(a, z, points[i]) == 0 {
                labels[i] = SupportLabel::Supported;
            }
        }
    }
    Ok(labels)
}
