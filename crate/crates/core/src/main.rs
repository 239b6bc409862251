fn main() {
    std::process::exit(radii::cli::main_with_args(std::env::args_os()));
}
