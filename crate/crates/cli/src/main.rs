use std::io::Write;

fn main() {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let arg_refs: Vec<&str> = args.iter().map(String::as_str).collect();
    let stdout = std::io::stdout();
    let mut out = stdout.lock();
    let code = cfperm_cli::run(&arg_refs, &mut out);
    let _ = out.flush();
    std::process::exit(code);
}
