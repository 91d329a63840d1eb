fn main() {
    std::process::exit(hyperinterp_cli::run(std::env::args_os()));
}
