fn main() {
    std::process::exit(model_tone::cli::run_main());
}
