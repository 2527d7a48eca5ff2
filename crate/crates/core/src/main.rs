fn main() {
    std::process::exit(lrc::cli::main_with_args(std::env::args_os()));
}
