//! Closed-form real-root isolation for cubic equations.
//!
//! Given `x³ + ax² + bx + c`, the crate decides which coefficient regime
//! applies, locates `−c` among a short list of landmark levels, and reads off
//! one isolation interval per real root whose endpoints are simple closed-form
//! quantities (roots of auxiliary quadratics, `−a`, `±√−b`, `−c/b`, ...).
//! Nothing is solved numerically on that path. An independent Sturm-sequence
//! oracle ([`oracle`]) checks every output.
//!
//! ```
//! use cubic_iso::{isolate, MonicCubic, Tolerance};
//!
//! let cubic = MonicCubic::new(3.0, -0.5, -4.0).unwrap();
//! let iso = isolate(&cubic, &Tolerance::default()).unwrap();
//! assert_eq!((iso.figure, iso.case), (7, 5));
//! assert_eq!(iso.intervals.len(), 3);
//! ```

pub mod batch;
pub mod cases;
pub mod cubic;
pub mod error;
pub mod isolator;
pub mod landmarks;
pub mod oracle;
pub mod regime;
pub mod report;
pub mod sweep;
pub mod tolerance;

pub use batch::{analyze, analyze_batch, campaign, Analysis, CampaignSummary, Execution};
pub use cubic::{DepressedCubic, GeneralCubic, MonicCubic, ZeroRootFactor};
pub use error::{Error, Result};
pub use isolator::{
    c_slot_intervals, harness_narrow, isolate, isolate_with, upper_lower_bounds, BoundsMode,
    Endpoint, HarnessMode, Interval, IsolateOptions, RootBound, RootIsolation, Tag,
};
pub use landmarks::{harness, landmarks, Harness, Landmarks};
pub use oracle::{
    count_roots_in, solve_all, sturm_chain, verify, verify_claims, Claims, RootReport, SturmChain,
    VerificationReport,
};
pub use regime::{
    classify, count_real_roots, near_any_boundary, regime, sign_classify, BoundaryFlag,
    Classification, Regime, RegimeKind,
    RootCount, SignPattern, TableId,
};
pub use report::CubicReport;
pub use sweep::{sweep, sweep_with, AffineFamily, Boundary, SweepConfig, SweepReport};
pub use tolerance::Tolerance;
