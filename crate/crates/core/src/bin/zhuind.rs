fn main() {
    let (code, out) = zhuind::cli::run_cli(std::env::args_os());
    if code == 2 {
        eprint!("{out}");
    } else {
        print!("{out}");
    }
    std::process::exit(code);
}
