fn main() {
    std::process::exit(bisemikit::cli::run(std::env::args_os()));
}
