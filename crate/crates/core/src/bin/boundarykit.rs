fn main() {
    std::process::exit(boundarykit::cli::run(std::env::args_os()));
}
