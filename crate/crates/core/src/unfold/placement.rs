use serde::{Deserialize, Serialize};

use super::{Development, UnfoldError};
use crate::geom::{rigid_map_from_edge, ConvexPolygon2, PlanarIsometry, Segment, Side};

/// The top face folded out across rim edge `a_j a_{j+1}`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TopPlacement {
    pub attach: usize,
    pub hexagon: ConvexPolygon2,
    pub isometry: PlanarIsometry,
}

impl TopPlacement {
    /// Image of the attachment edge.
    pub fn attachment_edge(&self) -> Segment {
        let v = self.hexagon.vertices();
        Segment::new(v[self.attach], v[(self.attach + 1) % 6])
    }
}

/// Maps edge `attach` of the intrinsic top face onto its rim segment.
///
/// The band quad lies on the right of the rim segment `a_j → a_{j+1}` (its
/// own boundary runs `a_{j+1} → a_j`), so an orientation-preserving map puts
/// the top face on the left: the fold-out across the shared edge.
pub fn place_top(dev: &Development, attach: usize) -> Result<TopPlacement, UnfoldError> {
    if attach >= 6 {
        return Err(UnfoldError::Index { index: attach });
    }
    let t = dev.position_of(attach);
    let top = dev.top.vertices();
    let src = Segment::new(top[attach], top[(attach + 1) % 6]);
    let dst = Segment::new(dev.rim[t], dev.rim[t + 1]);
    let isometry = rigid_map_from_edge(src, dst, Side::Left)?;
    Ok(TopPlacement {
        attach,
        hexagon: dev.top.transformed(&isometry),
        isometry,
    })
}
