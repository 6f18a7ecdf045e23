fn main() {
    std::process::exit(curvedcomb::cli::main_with_args(std::env::args_os()));
}
