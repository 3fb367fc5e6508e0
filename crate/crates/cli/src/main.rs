use std::io::Write;

fn main() {
    let out = torsionlab::app::dispatch(std::env::args_os());
    eprint!("{}", out.stderr);
    let mut stdout = std::io::stdout().lock();
    let _ = stdout.write_all(out.stdout.as_bytes());
    if !out.stdout.is_empty() && !out.stdout.ends_with('\n') {
        let _ = stdout.write_all(b"\n");
    }
    let _ = stdout.flush();
    std::process::exit(out.code);
}
