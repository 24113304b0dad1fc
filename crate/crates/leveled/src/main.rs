fn main() {
    std::process::exit(leveled::cli::run(std::env::args_os()));
}
