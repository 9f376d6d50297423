//! Command-line front end for `chord-census`.

pub mod app;
pub mod render;
pub mod verify;

pub use app::{main_with_args, run, Cli, DEFAULT_BUDGET};
pub use render::render_svg;
