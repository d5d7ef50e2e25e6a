//! File formats and report rendering behind the `stratzero` command.

pub mod format;
pub mod report;

pub use format::{parse_game_file, render_game_file, Block, FormatError};
pub use report::{emit_bench_csv, emit_equilibria, emit_report, ReportDocument, ReportFormat};
