fn main() {
    std::process::exit(ciqw_cli::run(std::env::args_os()));
}
