use std::process::ExitCode;

use groupoid_jordan::cli::parse_and_dispatch;

fn main() -> ExitCode {
    let (report, code) = parse_and_dispatch(std::env::args_os());
    let text = report.render();
    if code == 1 {
        eprint!("{text}");
    } else {
        print!("{text}");
    }
    ExitCode::from(code as u8)
}
