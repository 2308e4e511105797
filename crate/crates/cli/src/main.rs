use std::io::Write;

fn main() {
    if let Some(n) = std::env::var("COTLAB_THREADS").ok().and_then(|s| s.parse::<usize>().ok()).filter(|&n| n > 0) {
        rayon::ThreadPoolBuilder::new().num_threads(n).build_global().expect("thread pool is configured once");
    }
    let argv: Vec<String> = std::env::args().skip(1).collect();
    let out = cotlab_cli::run(&argv);
    print!("{}", out.stdout);
    eprint!("{}", out.stderr);
    std::io::stdout().flush().ok();
    std::process::exit(out.exit_code);
}
