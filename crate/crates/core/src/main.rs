use std::io::Write;
use std::process::ExitCode;

fn main() -> ExitCode {
    match sympcoh::cli::run_args(std::env::args_os()) {
        Ok(out) => {
            let mut stdout = std::io::stdout().lock();
            // a closed pipe is not worth a panic
            let _ = stdout.write_all(out.as_bytes());
            ExitCode::SUCCESS
        }
        Err(e) if e.code == 0 => {
            print!("{}", e.message);
            ExitCode::SUCCESS
        }
        Err(e) => {
            let msg = e.message.trim_end();
            if msg.starts_with("error:") {
                eprintln!("{msg}");
            } else {
                eprintln!("error: {msg}");
            }
            ExitCode::from(e.code as u8)
        }
    }
}
