# Japanese toy resources (JLPT-style levels). Lemmas are surface forms, as the
# analyzer keeps source-text lemmas for Japanese.

LEXICON = {
    "N5": """町 川 近く 大きな 橋 した 市場 米 毎週 美しい 窓 後 王 上 間 物 使って 終わった
広い 森 学校 子供 古い 言葉 絵 たくさん ある 毎年 夏 多く 人 来る 新しい 二つ 国 とても 本
一万 冊 子供たち 村 長く 冬 水 冷たい 人々 日曜日 朝 よく 公園 歩く 東 来た お茶 一番 建物
一つ 家族 歌 歌った 作った 山 北 強い 風 仕事 小さい 十二 二百年 着いた 買い物 大きい 速く
すぐに 多くの 新しく 始めた 住んでいた 取った 守った 遠く 大変 少しずつ 人たち""",
    "N4": """商人 教会 戦争 人口 増えた 城 運んだ 約束 終わり その後 通っていた 調べた 祭り
壊れた 壁 直した 港 考えた 鉄道 旅行 楽 大切 船 図書館 読み書き 学ぶ 持ってきた 塔 生活
音楽家 結婚式 工場 最初に 機械 首都 比べて 探す 移った 集めた 豊か 丘 立っている 有名
もらった 土地 発展 商売 昔からの 問題 着く 若者 布 谷 主に 作られた 約 嵐 博物館 世紀""",
    "N3": """地域 政府 学者 起源 労働者 議会 経済 遠方 お互いに 助け合った 伝統的な 一年中
機械 比べて 防いでいる 広げられた 農民 軍隊 両国 結んで 森林 絹 窓""",
    "N2": """住民 建設 多数 購入 支配 獲得した 現代的な 困難 豊富な 開始した 領土""",
    "N1": """著名 急速に 頻繁に 紛争 居住していた 繁栄 商業 徐々に 壮大な 維持した""",
}

PHRASES = {}

SYNONYMS = [
    ("住民", "人たち"), ("建設した", "作った"), ("多数", "多く"), ("購入した", "買った"),
    ("著名", "有名"), ("急速に", "すぐに"), ("頻繁に", "よく"), ("紛争", "戦争"),
    ("獲得した", "もらった"), ("居住していた", "住んでいた"), ("現代的な", "新しい"),
    ("繁栄", "発展"), ("商業", "商売"), ("壮大な", "大きな"), ("徐々に", "少しずつ"),
    ("開始した", "始めた"), ("困難", "大変"), ("豊富な", "多くの"), ("遠方", "遠く"),
    ("領土", "土地"), ("維持した", "守った"),
]

# Function chunks the analyzer should tag (filtered for Japanese).
LEMMAS = [
    ("である", "である", "AUX"), ("だった", "だ", "AUX"), ("には", "には", "ADP"),
    ("について", "について", "ADP"), ("によって", "によって", "ADP"),
    ("にとって", "にとって", "ADP"), ("おかげで", "おかげで", "ADP"),
    ("ために", "ために", "SCONJ"), ("たち", "たち", "PART"), ("すぎる", "すぎる", "AUX"),
    ("になった", "になる", "AUX"), ("へ", "へ", "ADP"), ("が", "が", "ADP"),
    ("買った", "買う", "VERB"), ("まま", "まま", "NOUN"), ("小さ", "小さい", "ADJ"),
]

SENTENCES = [
    "町の住民は川の近くに大きな橋を建設した。",
    "多数の商人が毎週市場で米や布を購入した。",
    "この地域の教会は美しい窓で著名である。",
    "戦争の後、町の人口は急速に増えた。",
    "王は谷の上の城に居住していた。",
    "軍隊は二百年の間この地域を支配した。",
    "農民は頻繁に川を使って物を運んだ。",
    "両国が約束を結んで紛争は終わった。",
    "その後、政府は広い森の領土を獲得した。",
    "学校には主に商人の子供が通っていた。",
    "学者たちは古い言葉の起源について調べた。",
    "博物館には現代的な絵がたくさんある。",
    "毎年夏の祭りには多くの人が来る。",
    "嵐の後、労働者たちは壊れた壁を直した。",
    "町の議会は古い港が小さすぎると考えた。",
    "新しい鉄道のおかげで二つの町の間の旅行が楽になった。",
    "この土地は国の経済にとってとても大切だった。",
    "遠方の港から船が着いた。",
    "図書館には約一万冊の本がある。",
    "子供たちは村の学校で読み書きを学ぶ。",
    "川は長く、冬には水がとても冷たい。",
    "人々は日曜日の朝によく公園を歩く。",
    "東から来た商人はお茶や絹を持ってきた。",
    "古い塔はこの国で一番古い建物の一つである。",
    "村の生活は困難だったが、家族はお互いに助け合った。",
    "音楽家たちは結婚式で伝統的な歌を歌った。",
    "この地域には一年中豊富な水がある。",
    "工場は最初に布を作ったが、後に機械を作った。",
    "町は首都と比べて小さいままだった。",
    "山は北からの強い風を防いでいる。",
    "多くの若者が仕事を探すために首都へ移った。",
    "港は大きな船のために広げられた。",
    "地域の繁栄は遠くの村から農民を集めた。",
    "町は商業によって徐々に豊かになった。",
    "壮大な城は丘の上に立っている。",
    "商人たちは新しい市場を開始した。",
    "王は古い橋を維持した。",
]

HEADINGS = ["参考文献", "脚注", "関連項目", "外部リンク", "出典"]
REF_LINES = ["山田太郎『北の町の歴史』東京、一九九八年。",
             "町議会記録、港に関する資料、第一巻から第四巻。"]
SHORT = "町には小さな博物館がある。"
TITLES = ["港町", "川の谷", "古い市場"]
