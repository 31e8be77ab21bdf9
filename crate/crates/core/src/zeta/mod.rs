//! Zeta functions, Newton polygons and aggregate statistics of point counts.

pub mod counts;
pub mod lpoly;
pub mod moments;
pub mod newton;
pub mod tables;

pub use counts::{
    ci_point_counts, ci_point_counts_with, count_plane_quintic, count_points_ci, count_points_hyp,
    count_points_trig, hyp_point_counts, trig_point_counts, QuadricPoints,
};
pub use lpoly::{isogeny_key, lpoly_from_counts, IsogenyKey, LPoly, PointCounts};
pub use moments::{bergstrom_moment, PartitionSpec};
pub use newton::{newton_polygon, NewtonPolygon};
pub use tables::{aut_histogram, aut_histograms_markdown, tabulate, AUT_HISTOGRAMS, NewtonTable, TableRow, NEWTON_TABLE};
