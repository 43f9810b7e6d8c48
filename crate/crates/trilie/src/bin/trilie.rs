fn main() {
    std::process::exit(trilie::cli::run(std::env::args_os()));
}
