//! Co-design and validation toolkit for multi-limb floating-base robots.
//!
//! The crate covers the full desk-scale design loop for a three-limb
//! relocatable manipulator:
//!
//! * [`model`] — parameterized limb templates and robot model generation,
//!   with a diffable on-disk document format;
//! * [`kinematics`] — forward kinematics, world-frame Jacobians, damped
//!   least-squares IK, worst-case manipulability and workspace bounds;
//! * [`dynamics`] — floating-base mass matrix and bias terms, contact
//!   machinery, QP inverse dynamics and trajectory load evaluation;
//! * [`collision`] — capsule/box/plane primitive distance queries;
//! * [`planner`] — contact-manifold constrained RRT-Connect planning and
//!   trapezoidal time parameterization;
//! * [`trajopt`] — quasi-static nonlinear trajectory optimization for the
//!   single-stance gravity scenario;
//! * [`codesign`] — the outer sweep loop: scenario battery, feasibility
//!   gating, design selection and report emission.
//!
//! Generalized coordinates are ordered `[base position (3), base
//! orientation (quaternion), joints (n)]`; generalized velocities are
//! `[base linear velocity (world, 3), base angular velocity (world, 3),
//! joint rates (n)]`, so every velocity-space quantity has dimension
//! `6 + n`.

pub mod codesign;
pub mod collision;
pub mod dynamics;
pub mod kinematics;
pub mod math;
pub mod model;
pub mod planner;
pub mod qp;
pub mod trajopt;

pub use kinematics::Configuration;
pub use model::{DesignParams, LimbTemplate, RobotModel};
