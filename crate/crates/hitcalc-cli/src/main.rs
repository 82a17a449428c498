fn main() {
    std::process::exit(hitcalc_cli::cli::run(std::env::args_os()));
}
