use std::io::Write;

fn main() {
    let (out, code) = gabi_cli::main_with(std::env::args_os());
    let mut stream: Box<dyn Write> = if code == 2 { Box::new(std::io::stderr()) } else { Box::new(std::io::stdout()) };
    let _ = stream.write_all(out.as_bytes());
    std::process::exit(code);
}
