# English toy resources. Levels follow CEFR loosely; this is test data, not
# a substitute for a real word list.

LEXICON = {
    "A1": """a an the and be have do go come make take see look want like get give say
know think eat drink live work play read write help buy walk run start stop open close
big small good bad new old happy many very day year time people man woman child family
house home city town school book water food friend money car name country world place
way road street morning night week month long short hot cold also now here there today
again often always never sometimes really one two three first last colour color red music
animal dog cat tree park shop job use need find love young sunday summer winter ten
thousand learn song sing boat ship people people lot""",
    "A2": """begin build change choose decide explain grow hope move plan remember show
travel visit win become bring carry village river mountain history language story idea
problem question answer group team game war king church area land farm factory island sea
coast forest famous popular modern early large important different possible free rich poor
strong quickly together later soon still already building bridge north south east west
wall fire window tower castle hill valley square market wedding machine cloth water
weekly picture painting letter lake wind storm ask end try enough leave receive about
mostly hold most beautiful well-known kind wool grain tea silk""",
    "B1": """allow appear arrive belong compete contain continue create describe develop
discover improve include increase produce protect reduce replace support government region
society culture industry trade battle army capital border century period tradition
knowledge method research result success ancient local natural national international
traditional various major successful eventually especially agreement attract visitor
writer musician scientist worker farmer harbour railway line travel collection museum
library council mayor festival shelter damage repair transport goods port origin spice
remain form sign control huge gain found leading however merchant wealth perform later
central rule ruler lead""",
    "B2": """acquire emerge establish maintain obtain reveal demonstrate dominate expand
consist significant substantial considerable numerous contemporary economy empire
influence territory conflict architecture authority purchase frequently attempt conclude
rapidly inquire distant restore historian scholar extremely sufficient vast
grant harbour locate attend age kingdom wealthy""",
    "C1": """commence facilitate implement constitute predominantly subsequently notably
renowned prosperity sovereignty inhabitant residence reside vessel magnificent utilize
terminate initially nevertheless accommodate dynasty commerce prominent""",
    "C2": """aforementioned ameliorate promulgate quintessential hegemony edifice sovereign""",
}

PHRASES = {
    "A2": ["give up", "look after", "a lot of"],
    "B1": ["set up", "find out", "take place", "at first"],
    "B2": ["carry out", "ice age"],
}

# hard surface form -> easier alternatives
SYNONYMS = [
    ("purchased", "bought"), ("purchase", "buy"),
    ("commenced", "began"), ("commence", "begin"),
    ("constructed", "built"),
    ("acquired", "gained"),
    ("established", "founded"),
    ("numerous", "many"),
    ("substantial", "large"),
    ("considerable", "great"),
    ("renowned", "famous"),
    ("magnificent", "beautiful"),
    ("demonstrated", "showed"),
    ("rapidly", "quickly"),
    ("resided", "lived"),
    ("dominated", "controlled"),
    ("frequently", "often"),
    ("utilized", "used"),
    ("conflict", "war"),
    ("terminated", "ended"),
    ("subsequently", "later"),
    ("obtained", "received"),
    ("vast", "huge"),
    ("predominantly", "mostly"),
    ("inquired", "asked"),
    ("residence", "home"),
    ("significant", "important"),
    ("contemporary", "modern"),
    ("prominent", "leading"),
    ("attempted", "tried"),
    ("concluded", "decided"),
    ("facilitated", "helped"),
    ("extremely", "very"),
    ("vessels", "boats"),
    ("approximately", "about"),
    ("sovereign", "ruler"),
    ("edifice", "building"),
    ("sufficient", "enough"),
    ("initially", "first"),
    ("nevertheless", "however"),
    ("accommodate", "hold"),
    ("inhabitants", "people"),
    ("territory", "land"),
    ("ancient", "old"),
    ("prosperity", "wealth"),
    ("commerce", "trade"),
]

# irregular surface -> lemma, POS
LEMMAS = [
    ("bought", "buy", "VERB"), ("began", "begin", "VERB"), ("begun", "begin", "VERB"),
    ("built", "build", "VERB"), ("grew", "grow", "VERB"), ("grown", "grow", "VERB"),
    ("brought", "bring", "VERB"), ("made", "make", "VERB"), ("found", "find", "VERB"),
    ("held", "hold", "VERB"), ("holds", "hold", "VERB"), ("showed", "show", "VERB"),
    ("shown", "show", "VERB"), ("took", "take", "VERB"), ("taken", "take", "VERB"),
    ("gave", "give", "VERB"), ("given", "give", "VERB"), ("went", "go", "VERB"),
    ("gone", "go", "VERB"), ("came", "come", "VERB"), ("saw", "see", "VERB"),
    ("seen", "see", "VERB"), ("knew", "know", "VERB"), ("known", "know", "VERB"),
    ("thought", "think", "VERB"), ("ran", "run", "VERB"), ("wrote", "write", "VERB"),
    ("written", "write", "VERB"), ("got", "get", "VERB"), ("led", "lead", "VERB"),
    ("left", "leave", "VERB"), ("sang", "sing", "VERB"), ("children", "child", "NOUN"),
    ("people", "people", "NOUN"), ("men", "man", "NOUN"), ("women", "woman", "NOUN"),
    ("founded", "found", "VERB"), ("lived", "live", "VERB"), ("used", "use", "VERB"),
    ("oldest", "old", "ADJ"), ("larger", "large", "ADJ"), ("bigger", "big", "ADJ"),
    ("twelfth", "twelfth", "ADJ"), ("nineteenth", "nineteenth", "ADJ"),
]

SENTENCES = [
    "The town was established in the early twelfth century by farmers from the north.",
    "Numerous families commenced trade with merchants along the river.",
    "The inhabitants constructed a large stone bridge near the old market.",
    "During the following years the town acquired substantial wealth from commerce.",
    "Many visitors purchased wool and grain at the weekly market.",
    "The local church is renowned for its magnificent windows.",
    "Historians have demonstrated that the population grew rapidly after the war.",
    "The king resided in a castle on the hill above the valley.",
    "The army dominated the region for nearly two centuries.",
    "Farmers frequently utilized the river to transport goods to the coast.",
    "The conflict terminated when both sides signed an agreement.",
    "Subsequently the government obtained control of the vast forest.",
    "The school was predominantly attended by children of merchants.",
    "Scholars inquired about the origins of the ancient language.",
    "The residence of the mayor was located near the central square.",
    "The museum contains a significant collection of contemporary paintings.",
    "Several prominent writers lived in the town during the nineteenth century.",
    "The festival attracts thousands of visitors every summer.",
    "Workers attempted to repair the damaged walls after the storm.",
    "The city council concluded that the old harbour was too small.",
    "A new railway line facilitated travel between the two cities.",
    "The territory was extremely important for the economy of the kingdom.",
    "Ships and other vessels arrived from distant ports.",
    "The library holds approximately ten thousand books.",
    "Children learn to read and write at the village school.",
    "The river is long and the water is cold in winter.",
    "People often walk in the park on Sunday morning.",
    "The sovereign granted the town special rights.",
    "Traders from the east brought spices, silk and tea.",
    "The old tower is one of the oldest buildings in the country.",
    "Life in the village was hard, but families helped each other.",
    "The edifice was damaged by fire and later restored.",
    "Musicians performed traditional songs at the wedding.",
    "The region has sufficient water for farming throughout the year.",
    "Initially the factory produced cloth, but later it made machines.",
    "Nevertheless, the town remained small compared with the capital.",
    "Scientists discovered that the lake had formed after the last ice age.",
    "The mountains provide shelter from the strong winds of the north.",
    "Many young people moved to the capital to find work.",
    "The harbour was expanded to accommodate larger ships.",
    "The prosperity of the region attracted farmers from distant villages.",
    "Festivals take place in the central square every month.",
]

HEADINGS = ["References", "External links", "See also", "Notes", "Further reading",
            "Bibliography", "Sources"]
REF_LINES = ["Smith, J. A History of the Northern Towns. Oxford, 1998.",
             "Brown, K. Trade and Rivers in the Middle Ages. London, 2004.",
             "Town council archive, records of the harbour, volumes one to four."]
SHORT = "The town has a small museum."
TITLES = ["Harbour town", "River valley", "The old market"]
