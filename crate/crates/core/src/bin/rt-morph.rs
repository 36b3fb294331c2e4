fn main() {
    std::process::exit(rt_morph::cli::run(std::env::args_os()));
}
