fn main() {
    std::process::exit(octoforge::cli::run(std::env::args_os()));
}
