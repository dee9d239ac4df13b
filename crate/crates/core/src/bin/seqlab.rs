fn main() {
    std::process::exit(seqlab::cli::run(std::env::args_os()));
}
